"""HTTP quiz service over a finalized question bank.

Endpoints (JSON over HTTP/1.1):

    POST /v1/sessions                      {student_id} -> {session_id, question_count}
    GET  /v1/sessions/{id}/next            -> current question or {done: true}
    POST /v1/sessions/{id}/answers         {question_id, answer_text} -> feedback
    GET  /v1/sessions/{id}/report          -> per-question grades + counts
    GET  /frames/{file}                    -> linked frame image

Sessions persist as append-only JSON-line logs (one file per session)
under the state directory; replaying the log restores every session
exactly, so a restart loses nothing. Answers must arrive in quiz order.
The bank itself is never written to.
"""

from __future__ import annotations

import json
import logging
import os
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from . import feedback
from .imagelink import LINKED
from .rank_assign import QuestionBank, Quiz, allocate, default_total, select_for_student
from .wordnet import WordNetGraph

logger = logging.getLogger(__name__)


class ApiError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


@dataclass
class AnswerRecord:
    question_id: str
    answer_text: str
    similarity: float
    grade: str
    answered_at: str


@dataclass
class QuizSession:
    session_id: str
    student_id: str
    quiz: Quiz
    answers: list[AnswerRecord] = field(default_factory=list)

    @property
    def cursor(self) -> int:
        return len(self.answers)


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


class QuizService:
    """Bank + grading + session persistence; HTTP-agnostic."""

    def __init__(
        self,
        bank: QuestionBank | None,
        graph: WordNetGraph,
        state_dir,
        thresholds: feedback.GradeThresholds = feedback.GradeThresholds(),
        frames_dir=None,
        total_questions: int | None = None,
    ):
        self.bank = bank
        self.graph = graph
        self.state_dir = Path(state_dir)
        self.state_dir.mkdir(parents=True, exist_ok=True)
        self.thresholds = thresholds
        self.frames_dir = Path(frames_dir) if frames_dir else None
        self.sessions: dict[str, QuizSession] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._global_lock = threading.Lock()
        if bank is not None:
            total = total_questions
            if total is None:
                total = bank.config.get("total_questions")
            if total is None:
                total = default_total(bank.video_duration_ms)
            self.quiz_id = bank.config.get("selection.quiz_id") or bank.source_id
            self.counts = allocate([s.duration_ms for s in bank.segments], total)
        self._replay()

    # -- persistence --------------------------------------------------------

    def _log_path(self, session_id: str) -> Path:
        return self.state_dir / f"{session_id}.jsonl"

    def _append(self, session_id: str, record: dict) -> None:
        with open(self._log_path(session_id), "a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, sort_keys=True) + "\n")
            fh.flush()
            os.fsync(fh.fileno())

    def _replay(self) -> None:
        for path in sorted(self.state_dir.glob("*.jsonl")):
            try:
                lines = [
                    json.loads(line)
                    for line in path.read_text(encoding="utf-8").splitlines()
                    if line.strip()
                ]
            except json.JSONDecodeError:
                logger.warning("skipping corrupt session log %s", path.name)
                continue
            if not lines or lines[0].get("type") != "CREATED":
                continue
            head = lines[0]
            session = QuizSession(
                session_id=head["session_id"],
                student_id=head["student_id"],
                quiz=Quiz(
                    quiz_id=head["quiz_id"],
                    student_id=head["student_id"],
                    question_ids=tuple(head["question_ids"]),
                    seed=head["seed"],
                ),
            )
            for line in lines[1:]:
                if line.get("type") == "ANSWERED":
                    session.answers.append(
                        AnswerRecord(
                            question_id=line["question_id"],
                            answer_text=line["answer_text"],
                            similarity=line["similarity"],
                            grade=line["grade"],
                            answered_at=line["answered_at"],
                        )
                    )
            self.sessions[session.session_id] = session

    # -- session operations --------------------------------------------------

    def _session_lock(self, session_id: str) -> threading.Lock:
        with self._global_lock:
            return self._locks.setdefault(session_id, threading.Lock())

    def _get_session(self, session_id: str) -> QuizSession:
        session = self.sessions.get(session_id)
        if session is None:
            raise ApiError(404, f"unknown session {session_id!r}")
        return session

    def create_session(self, student_id: str) -> dict:
        if self.bank is None:
            raise ApiError(503, "no question bank loaded")
        if not student_id or not isinstance(student_id, str):
            raise ApiError(400, "student_id is required")
        quiz = select_for_student(self.bank, self.counts, student_id, self.quiz_id)
        session = QuizSession(
            session_id=uuid.uuid4().hex, student_id=student_id, quiz=quiz
        )
        self._append(
            session.session_id,
            {
                "type": "CREATED",
                "session_id": session.session_id,
                "student_id": student_id,
                "quiz_id": quiz.quiz_id,
                "seed": quiz.seed,
                "question_ids": list(quiz.question_ids),
                "created_at": _now(),
            },
        )
        with self._global_lock:
            self.sessions[session.session_id] = session
        return {
            "session_id": session.session_id,
            "question_count": len(quiz.question_ids),
        }

    def next_question(self, session_id: str) -> dict:
        session = self._get_session(session_id)
        with self._session_lock(session_id):
            if session.cursor >= len(session.quiz.question_ids):
                return {"done": True}
            qid = session.quiz.question_ids[session.cursor]
            q = self.bank.question_by_id(qid)
            payload = {
                "question_id": qid,
                "text": q.question_text,
                "position": session.cursor + 1,
                "total": len(session.quiz.question_ids),
            }
            if q.link_outcome == LINKED and q.image_link is not None:
                payload["timestamp_ms"] = q.image_link.timestamp_ms
                if q.image_link.frame_ref:
                    payload["image_ref"] = "/frames/" + Path(q.image_link.frame_ref).name
            return payload

    def submit_answer(self, session_id: str, question_id, answer_text) -> dict:
        session = self._get_session(session_id)
        if not isinstance(question_id, str) or not isinstance(answer_text, str):
            raise ApiError(400, "question_id and answer_text are required")
        with self._session_lock(session_id):
            if session.cursor >= len(session.quiz.question_ids):
                raise ApiError(409, "quiz already complete")
            expected = session.quiz.question_ids[session.cursor]
            if question_id != expected:
                raise ApiError(
                    409, f"expected answer for {expected!r}, got {question_id!r}"
                )
            q = self.bank.question_by_id(question_id)
            result = feedback.grade(
                answer_text, q.model_answer, self.graph, self.thresholds
            )
            record = AnswerRecord(
                question_id=question_id,
                answer_text=answer_text,
                similarity=result.similarity,
                grade=result.grade,
                answered_at=_now(),
            )
            self._append(
                session_id,
                {
                    "type": "ANSWERED",
                    "question_id": record.question_id,
                    "answer_text": record.answer_text,
                    "similarity": record.similarity,
                    "grade": record.grade,
                    "answered_at": record.answered_at,
                },
            )
            session.answers.append(record)
            return {
                "similarity": result.similarity,
                "grade": result.grade,
                "model_answer": q.model_answer,
            }

    def session_report(self, session_id: str) -> dict:
        session = self._get_session(session_id)
        with self._session_lock(session_id):
            counts = {feedback.HIGH: 0, feedback.MEDIUM: 0, feedback.LOW: 0}
            rows = []
            for ans in session.answers:
                counts[ans.grade] += 1
                rows.append(
                    {
                        "question_id": ans.question_id,
                        "grade": ans.grade,
                        "similarity": ans.similarity,
                    }
                )
            return {"answers": rows, "counts": counts}

    def frame_bytes(self, name: str) -> tuple[bytes, str]:
        if self.frames_dir is None or "/" in name or "\\" in name or name.startswith("."):
            raise ApiError(404, "no such frame")
        path = self.frames_dir / name
        if not path.is_file():
            raise ApiError(404, "no such frame")
        suffix = path.suffix.lower()
        mime = {"png": "image/png", "jpg": "image/jpeg", "jpeg": "image/jpeg"}.get(
            suffix.lstrip("."), "application/octet-stream"
        )
        return path.read_bytes(), mime


class _Handler(BaseHTTPRequestHandler):
    service: QuizService  # set by make_server

    def log_message(self, fmt, *args):
        logger.debug("%s %s", self.address_string(), fmt % args)

    def _send_json(self, status: int, payload: dict) -> None:
        body = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _read_json(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        if length == 0:
            raise ApiError(400, "request body required")
        try:
            data = json.loads(self.rfile.read(length))
        except json.JSONDecodeError as exc:
            raise ApiError(400, f"invalid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ApiError(400, "JSON object required")
        return data

    def _route(self, method: str) -> None:
        parts = [p for p in self.path.split("?")[0].split("/") if p]
        try:
            if method == "POST" and parts == ["v1", "sessions"]:
                body = self._read_json()
                if "student_id" not in body:
                    raise ApiError(400, "student_id is required")
                self._send_json(200, self.service.create_session(body["student_id"]))
            elif (
                method == "GET"
                and len(parts) == 4
                and parts[:2] == ["v1", "sessions"]
                and parts[3] == "next"
            ):
                self._send_json(200, self.service.next_question(parts[2]))
            elif (
                method == "POST"
                and len(parts) == 4
                and parts[:2] == ["v1", "sessions"]
                and parts[3] == "answers"
            ):
                body = self._read_json()
                self._send_json(
                    200,
                    self.service.submit_answer(
                        parts[2], body.get("question_id"), body.get("answer_text")
                    ),
                )
            elif (
                method == "GET"
                and len(parts) == 4
                and parts[:2] == ["v1", "sessions"]
                and parts[3] == "report"
            ):
                self._send_json(200, self.service.session_report(parts[2]))
            elif method == "GET" and len(parts) == 2 and parts[0] == "frames":
                data, mime = self.service.frame_bytes(parts[1])
                self.send_response(200)
                self.send_header("Content-Type", mime)
                self.send_header("Content-Length", str(len(data)))
                self.end_headers()
                self.wfile.write(data)
            else:
                raise ApiError(404, f"no route for {method} {self.path}")
        except ApiError as exc:
            self._send_json(exc.status, {"error": exc.message})
        except Exception:  # defensive: never kill the connection thread
            logger.exception("unhandled error for %s %s", method, self.path)
            self._send_json(500, {"error": "internal error"})

    def do_GET(self):
        self._route("GET")

    def do_POST(self):
        self._route("POST")


def make_server(service: QuizService, port: int, host: str = "127.0.0.1") -> ThreadingHTTPServer:
    handler = type("BoundHandler", (_Handler,), {"service": service})
    return ThreadingHTTPServer((host, port), handler)


def serve(service: QuizService, port: int, host: str = "127.0.0.1") -> None:
    """Run until interrupted."""
    server = make_server(service, port, host)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.shutdown()
        server.server_close()
