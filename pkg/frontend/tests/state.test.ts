import { describe, expect, it } from "vitest";

import type { Feedback, QuestionPayload } from "../src/api.js";
import {
  fromNextResponse,
  showFeedback,
  startScreen,
  withError,
  withSubmitting,
} from "../src/state.js";

const question: QuestionPayload = {
  question_id: "q0001",
  text: "What minimizes the cost function?",
  position: 1,
  total: 5,
};

const feedback: Feedback = { similarity: 1, grade: "HIGH", model_answer: "gradient descent" };

describe("state transitions", () => {
  it("next response with a question shows the question screen", () => {
    const state = fromNextResponse("s", question);
    expect(state.screen).toBe("question");
  });

  it("done response shows the report screen", () => {
    const state = fromNextResponse("s", { done: true }, { answers: [], counts: {} });
    expect(state.screen).toBe("report");
  });

  it("feedback is only shown from a question", () => {
    const q = fromNextResponse("s", question);
    const fb = showFeedback(q, "my answer", feedback);
    expect(fb.screen).toBe("feedback");
    expect(showFeedback(startScreen(), "x", feedback).screen).toBe("start");
  });

  it("submitting flag toggles without leaving the question", () => {
    const q = fromNextResponse("s", question);
    const busy = withSubmitting(q, true);
    expect(busy.screen).toBe("question");
    expect(busy.screen === "question" && busy.submitting).toBe(true);
  });

  it("errors attach to start and question screens", () => {
    expect(withError(startScreen(), "boom")).toMatchObject({ error: "boom" });
    const q = withSubmitting(fromNextResponse("s", question), true);
    const failed = withError(q, "boom");
    expect(failed).toMatchObject({ error: "boom", submitting: false });
  });
});
