import { QuizApi } from "./api.js";
import { mount } from "./app.js";

// API base: same origin by default, overridable for a separately
// hosted static bundle via <meta name="quiz-api-base" content="...">.
const meta = document.querySelector('meta[name="quiz-api-base"]');
const base = meta?.getAttribute("content") ?? "";

mount(new QuizApi(base), document.getElementById("app")!);
