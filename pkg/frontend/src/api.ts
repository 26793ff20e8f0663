// Typed client for the quiz service JSON API. The base URL is
// configurable so the static bundle can be served from anywhere.

export type CreatedSession = {
  session_id: string;
  question_count: number;
};

export type QuestionPayload = {
  question_id: string;
  text: string;
  position: number;
  total: number;
  timestamp_ms?: number;
  image_ref?: string;
};

export type NextResponse = QuestionPayload | { done: true };

export type Feedback = {
  similarity: number;
  grade: "HIGH" | "MEDIUM" | "LOW";
  model_answer: string;
};

export type ReportRow = {
  question_id: string;
  grade: string;
  similarity: number;
};

export type Report = {
  answers: ReportRow[];
  counts: Record<string, number>;
};

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class QuizApi {
  constructor(private baseUrl: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, init);
    } catch (err) {
      throw new ApiError(0, `service unreachable: ${String(err)}`);
    }
    const body = await response.json().catch(() => ({}));
    if (!response.ok) {
      const message =
        typeof body === "object" && body !== null && "error" in body
          ? String((body as { error: unknown }).error)
          : `request failed with ${response.status}`;
      throw new ApiError(response.status, message);
    }
    return body as T;
  }

  createSession(studentId: string): Promise<CreatedSession> {
    return this.request<CreatedSession>("/v1/sessions", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ student_id: studentId }),
    });
  }

  nextQuestion(sessionId: string): Promise<NextResponse> {
    return this.request<NextResponse>(`/v1/sessions/${sessionId}/next`);
  }

  submitAnswer(
    sessionId: string,
    questionId: string,
    answerText: string,
  ): Promise<Feedback> {
    return this.request<Feedback>(`/v1/sessions/${sessionId}/answers`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ question_id: questionId, answer_text: answerText }),
    });
  }

  report(sessionId: string): Promise<Report> {
    return this.request<Report>(`/v1/sessions/${sessionId}/report`);
  }

  frameUrl(imageRef: string): string {
    return this.baseUrl + imageRef;
  }
}

export function isDone(next: NextResponse): next is { done: true } {
  return "done" in next && next.done === true;
}
