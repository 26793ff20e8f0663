// Session state as a pure function of the last server responses; the
// UI never grades or advances on its own.

import type { Feedback, NextResponse, QuestionPayload, Report } from "./api.js";
import { isDone } from "./api.js";

export type UiState =
  | { screen: "start"; error?: string }
  | {
      screen: "question";
      sessionId: string;
      question: QuestionPayload;
      submitting: boolean;
      error?: string;
    }
  | {
      screen: "feedback";
      sessionId: string;
      question: QuestionPayload;
      answerText: string;
      feedback: Feedback;
    }
  | { screen: "report"; sessionId: string; report: Report };

export function startScreen(error?: string): UiState {
  return { screen: "start", error };
}

export function fromNextResponse(
  sessionId: string,
  next: NextResponse,
  report?: Report,
): UiState {
  if (isDone(next)) {
    return {
      screen: "report",
      sessionId,
      report: report ?? { answers: [], counts: {} },
    };
  }
  return { screen: "question", sessionId, question: next, submitting: false };
}

export function withSubmitting(state: UiState, submitting: boolean): UiState {
  if (state.screen !== "question") {
    return state;
  }
  return { ...state, submitting };
}

export function withError(state: UiState, error: string): UiState {
  if (state.screen === "start") {
    return { ...state, error };
  }
  if (state.screen === "question") {
    return { ...state, submitting: false, error };
  }
  return state;
}

export function showFeedback(
  state: UiState,
  answerText: string,
  feedback: Feedback,
): UiState {
  if (state.screen !== "question") {
    return state;
  }
  return {
    screen: "feedback",
    sessionId: state.sessionId,
    question: state.question,
    answerText,
    feedback,
  };
}
