// Controller: hash routes (#/ start, #/session/<id> active quiz), the
// server is the single source of truth; a refresh anywhere re-fetches
// /next and lands on the server's cursor.

import { ApiError, QuizApi, isDone } from "./api.js";
import {
  UiState,
  fromNextResponse,
  showFeedback,
  startScreen,
  withError,
  withSubmitting,
} from "./state.js";
import { Handlers, render } from "./views.js";

export class App {
  private state: UiState = startScreen();

  constructor(
    private api: QuizApi,
    private container: HTMLElement,
    private navigate: (hash: string) => void = (hash) => {
      window.location.hash = hash;
    },
  ) {}

  getState(): UiState {
    return this.state;
  }

  private setState(state: UiState): void {
    this.state = state;
    const handlers: Handlers = {
      onStart: (studentId) => void this.start(studentId),
      onSubmit: (answerText) => void this.submit(answerText),
      onNext: () => void this.advance(),
      onRestart: () => {
        this.navigate("#/");
        this.setState(startScreen());
      },
    };
    render(this.container, this.state, handlers, this.api);
  }

  /** Route entry point; also used on refresh. */
  async route(hash: string): Promise<void> {
    const match = /^#\/session\/([A-Za-z0-9-]+)/.exec(hash);
    if (!match) {
      this.setState(startScreen());
      return;
    }
    await this.resume(match[1]);
  }

  private async start(studentId: string): Promise<void> {
    try {
      const created = await this.api.createSession(studentId);
      this.navigate(`#/session/${created.session_id}`);
      await this.resume(created.session_id);
    } catch (err) {
      this.setState(startScreen(this.describe(err)));
    }
  }

  /** Fetch the server cursor and show whatever it points at. */
  private async resume(sessionId: string): Promise<void> {
    try {
      const next = await this.api.nextQuestion(sessionId);
      if (isDone(next)) {
        const report = await this.api.report(sessionId);
        this.setState(fromNextResponse(sessionId, next, report));
      } else {
        this.setState(fromNextResponse(sessionId, next));
      }
    } catch (err) {
      if (err instanceof ApiError && err.status === 404) {
        this.navigate("#/");
        this.setState(startScreen("That session does not exist any more."));
        return;
      }
      this.setState(startScreen(this.describe(err)));
    }
  }

  private async submit(answerText: string): Promise<void> {
    if (this.state.screen !== "question") return;
    const { sessionId, question } = this.state;
    this.setState(withSubmitting(this.state, true));
    try {
      const feedback = await this.api.submitAnswer(
        sessionId,
        question.question_id,
        answerText,
      );
      this.setState(showFeedback(this.state, answerText, feedback));
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        // another tab moved the cursor: resync from the server
        await this.resume(sessionId);
        return;
      }
      this.setState(withError(this.state, this.describe(err)));
    }
  }

  private async advance(): Promise<void> {
    if (this.state.screen !== "feedback") return;
    await this.resume(this.state.sessionId);
  }

  private describe(err: unknown): string {
    if (err instanceof ApiError) {
      return err.status === 0
        ? "Cannot reach the quiz service. Check the server and retry."
        : err.message;
    }
    return String(err);
  }
}

export function mount(api: QuizApi, container: HTMLElement): App {
  const app = new App(api, container);
  window.addEventListener("hashchange", () => void app.route(window.location.hash));
  void app.route(window.location.hash);
  return app;
}
