import { beforeEach, describe, expect, it, vi } from "vitest";

import { ApiError, QuizApi, isDone } from "../src/api.js";
import { FakeService, sampleQuestions } from "./fakeservice.js";

describe("QuizApi", () => {
  let service: FakeService;
  let api: QuizApi;

  beforeEach(() => {
    service = new FakeService(sampleQuestions());
    vi.stubGlobal("fetch", service.fetch);
    api = new QuizApi();
  });

  it("creates a session", async () => {
    const created = await api.createSession("s1");
    expect(created.question_count).toBe(3);
    expect(created.session_id).toMatch(/^session-/);
  });

  it("maps service errors to ApiError with status", async () => {
    await expect(api.createSession("")).rejects.toMatchObject({ status: 400 });
    await expect(api.nextQuestion("ghost")).rejects.toMatchObject({ status: 404 });
  });

  it("walks questions in order and refuses skips", async () => {
    const { session_id } = await api.createSession("s1");
    const first = await api.nextQuestion(session_id);
    expect(isDone(first)).toBe(false);
    if (!isDone(first)) {
      expect(first.position).toBe(1);
      await expect(
        api.submitAnswer(session_id, "q0002", "skip ahead"),
      ).rejects.toMatchObject({ status: 409 });
      const feedback = await api.submitAnswer(session_id, first.question_id, "answer 1");
      expect(feedback.grade).toBe("HIGH");
      expect(feedback.model_answer).toBe("answer 1");
    }
  });

  it("reports done after the last answer", async () => {
    const { session_id } = await api.createSession("s1");
    for (const q of service.questions) {
      await api.submitAnswer(session_id, q.question_id, "");
    }
    expect(isDone(await api.nextQuestion(session_id))).toBe(true);
    const report = await api.report(session_id);
    expect(report.answers).toHaveLength(3);
    expect(report.counts.LOW).toBe(3);
  });

  it("turns network failure into status 0", async () => {
    vi.stubGlobal("fetch", () => Promise.reject(new TypeError("connection refused")));
    const offline = new QuizApi();
    await expect(offline.createSession("s1")).rejects.toSatisfy(
      (err: unknown) => err instanceof ApiError && err.status === 0,
    );
  });

  it("prefixes frame urls with the base", () => {
    const remote = new QuizApi("http://api.example:8080");
    expect(remote.frameUrl("/frames/eq.png")).toBe("http://api.example:8080/frames/eq.png");
  });
});
