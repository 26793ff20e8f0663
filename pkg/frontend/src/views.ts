// DOM builders for each screen. Views are dumb: they render a state
// and surface user intent through the handler bag.

import type { QuizApi } from "./api.js";
import type { UiState } from "./state.js";

export type Handlers = {
  onStart: (studentId: string) => void;
  onSubmit: (answerText: string) => void;
  onNext: () => void;
  onRestart: () => void;
};

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function errorBanner(message: string): HTMLElement {
  return el("div", "banner error", message);
}

function renderStart(state: Extract<UiState, { screen: "start" }>, handlers: Handlers) {
  const root = el("div", "screen start-screen");
  root.appendChild(el("h1", undefined, "Lecture quiz"));
  if (state.error) root.appendChild(errorBanner(state.error));
  const form = el("form");
  const input = el("input");
  input.id = "student-id";
  input.placeholder = "Student id";
  input.autocomplete = "off";
  const button = el("button", "primary", "Start quiz");
  button.type = "submit";
  form.append(input, button);
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const value = input.value.trim();
    if (!value) {
      input.classList.add("invalid");
      return; // local validation: empty id never reaches the server
    }
    handlers.onStart(value);
  });
  root.appendChild(form);
  return root;
}

function progress(position: number, total: number): HTMLElement {
  const node = el("div", "progress", `Question ${position} of ${total}`);
  node.id = "progress";
  return node;
}

function frameFigure(api: QuizApi, imageRef: string, timestampMs?: number): HTMLElement {
  const figure = el("figure", "frame");
  const img = el("img");
  img.src = api.frameUrl(imageRef);
  img.alt = "Linked video frame";
  img.addEventListener("error", () => {
    // broken image: fall back to the timestamp as text
    const seconds = Math.round((timestampMs ?? 0) / 1000);
    figure.replaceChildren(el("p", "frame-fallback", `Frame at ${seconds}s`));
  });
  figure.appendChild(img);
  return figure;
}

function renderQuestion(
  state: Extract<UiState, { screen: "question" }>,
  handlers: Handlers,
  api: QuizApi,
) {
  const root = el("div", "screen question-screen");
  const q = state.question;
  root.appendChild(progress(q.position, q.total));
  if (state.error) root.appendChild(errorBanner(state.error));
  root.appendChild(el("h2", "question-text", q.text));
  if (q.image_ref) {
    root.appendChild(frameFigure(api, q.image_ref, q.timestamp_ms));
  } else if (q.timestamp_ms !== undefined) {
    root.appendChild(
      el("p", "frame-fallback", `Frame at ${Math.round(q.timestamp_ms / 1000)}s`),
    );
  }
  const form = el("form");
  const box = el("textarea");
  box.id = "answer-box";
  box.placeholder = "Type your answer";
  const button = el("button", "primary", "Submit answer");
  button.type = "submit";
  button.disabled = state.submitting; // no duplicate submits
  form.append(box, button);
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    if (state.submitting) return;
    handlers.onSubmit(box.value);
  });
  root.appendChild(form);
  return root;
}

function renderFeedback(
  state: Extract<UiState, { screen: "feedback" }>,
  handlers: Handlers,
) {
  const root = el("div", "screen feedback-screen");
  const q = state.question;
  root.appendChild(progress(q.position, q.total));
  root.appendChild(el("h2", "question-text", q.text));
  const panel = el("div", "feedback-panel");
  const badge = el("span", `badge grade-${state.feedback.grade.toLowerCase()}`,
    state.feedback.grade);
  badge.id = "grade-badge";
  panel.appendChild(badge);
  panel.appendChild(
    el("p", "similarity", `Similarity: ${state.feedback.similarity.toFixed(2)}`),
  );
  panel.appendChild(el("p", "your-answer", `Your answer: ${state.answerText || "(empty)"}`));
  panel.appendChild(el("p", "model-answer", `Model answer: ${state.feedback.model_answer}`));
  root.appendChild(panel);
  const next = el("button", "primary", "Next");
  next.id = "next-button";
  next.addEventListener("click", () => handlers.onNext());
  root.appendChild(next);
  return root;
}

function renderReport(
  state: Extract<UiState, { screen: "report" }>,
  handlers: Handlers,
) {
  const root = el("div", "screen report-screen");
  root.appendChild(el("h1", undefined, "Quiz report"));
  const counts = state.report.counts;
  root.appendChild(
    el(
      "p",
      "counts",
      `HIGH ${counts.HIGH ?? 0} · MEDIUM ${counts.MEDIUM ?? 0} · LOW ${counts.LOW ?? 0}`,
    ),
  );
  const table = el("table", "report-table");
  const head = el("tr");
  head.append(el("th", undefined, "Question"), el("th", undefined, "Grade"),
    el("th", undefined, "Similarity"));
  table.appendChild(head);
  for (const row of state.report.answers) {
    const tr = el("tr", "report-row");
    tr.append(
      el("td", undefined, row.question_id),
      el("td", undefined, row.grade),
      el("td", undefined, row.similarity.toFixed(2)),
    );
    table.appendChild(tr);
  }
  root.appendChild(table);
  const again = el("button", undefined, "Start another session");
  again.addEventListener("click", () => handlers.onRestart());
  root.appendChild(again);
  return root;
}

export function render(
  container: HTMLElement,
  state: UiState,
  handlers: Handlers,
  api: QuizApi,
): void {
  let screen: HTMLElement;
  switch (state.screen) {
    case "start":
      screen = renderStart(state, handlers);
      break;
    case "question":
      screen = renderQuestion(state, handlers, api);
      break;
    case "feedback":
      screen = renderFeedback(state, handlers);
      break;
    case "report":
      screen = renderReport(state, handlers);
      break;
  }
  container.replaceChildren(screen);
}
