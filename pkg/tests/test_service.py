import hashlib
import threading

import httpx
import pytest

from lecturequiz import feedback
from lecturequiz.rank_assign import load_bank
from lecturequiz.service import ApiError, QuizService, make_server

GOLDEN = "ml_lecture_01.bank.json"


@pytest.fixture(scope="module")
def bank(data_dir):
    return load_bank(data_dir / GOLDEN)


def make_service(bank, graph, state_dir, **kwargs):
    return QuizService(bank, graph, state_dir=state_dir, **kwargs)


class TestSessions:
    def test_create_and_determinism(self, bank, graph, tmp_path):
        svc = make_service(bank, graph, tmp_path)
        first = svc.create_session("s1")
        second = svc.create_session("s1")
        assert first["session_id"] != second["session_id"]
        q1 = svc.sessions[first["session_id"]].quiz.question_ids
        q2 = svc.sessions[second["session_id"]].quiz.question_ids
        assert q1 == q2
        assert first["question_count"] == len(q1) > 0

    def test_missing_student_id(self, bank, graph, tmp_path):
        svc = make_service(bank, graph, tmp_path)
        with pytest.raises(ApiError) as err:
            svc.create_session("")
        assert err.value.status == 400

    def test_no_bank_503(self, graph, tmp_path):
        svc = QuizService(None, graph, state_dir=tmp_path)
        with pytest.raises(ApiError) as err:
            svc.create_session("s1")
        assert err.value.status == 503

    def test_next_and_answer_flow(self, bank, graph, tmp_path):
        svc = make_service(bank, graph, tmp_path)
        sid = svc.create_session("s1")["session_id"]
        total = svc.sessions[sid].quiz.question_ids
        for position, qid in enumerate(total, start=1):
            nxt = svc.next_question(sid)
            assert nxt["question_id"] == qid
            assert nxt["position"] == position
            assert nxt["total"] == len(total)
            question = bank.question_by_id(qid)
            result = svc.submit_answer(sid, qid, question.model_answer)
            assert result["grade"] == feedback.HIGH
            assert result["similarity"] == 1.0
            assert result["model_answer"] == question.model_answer
        assert svc.next_question(sid) == {"done": True}

    def test_out_of_order_409(self, bank, graph, tmp_path):
        svc = make_service(bank, graph, tmp_path)
        sid = svc.create_session("s1")["session_id"]
        wrong = svc.sessions[sid].quiz.question_ids[1]
        with pytest.raises(ApiError) as err:
            svc.submit_answer(sid, wrong, "answer")
        assert err.value.status == 409

    def test_unknown_session_404(self, bank, graph, tmp_path):
        svc = make_service(bank, graph, tmp_path)
        with pytest.raises(ApiError) as err:
            svc.next_question("nope")
        assert err.value.status == 404

    def test_empty_answer_graded_low(self, bank, graph, tmp_path):
        svc = make_service(bank, graph, tmp_path)
        sid = svc.create_session("s1")["session_id"]
        qid = svc.sessions[sid].quiz.question_ids[0]
        result = svc.submit_answer(sid, qid, "")
        assert result["grade"] == feedback.LOW

    def test_report_counts(self, bank, graph, tmp_path):
        svc = make_service(bank, graph, tmp_path)
        sid = svc.create_session("s1")["session_id"]
        assert svc.session_report(sid) == {"answers": [], "counts": {"HIGH": 0, "MEDIUM": 0, "LOW": 0}}
        ids = svc.sessions[sid].quiz.question_ids
        svc.submit_answer(sid, ids[0], bank.question_by_id(ids[0]).model_answer)
        svc.submit_answer(sid, ids[1], "")
        report = svc.session_report(sid)
        assert report["counts"] == {"HIGH": 1, "MEDIUM": 0, "LOW": 1}
        assert [row["question_id"] for row in report["answers"]] == list(ids[:2])

    def test_linked_question_carries_timestamp(self, bank, graph, tmp_path):
        svc = make_service(bank, graph, tmp_path, total_questions=len(bank.questions))
        sid = svc.create_session("s-linked")["session_id"]
        quiz_ids = svc.sessions[sid].quiz.question_ids
        saw_linked = False
        for qid in quiz_ids:
            nxt = svc.next_question(sid)
            q = bank.question_by_id(qid)
            if q.link_outcome == "LINKED":
                saw_linked = True
                assert nxt["timestamp_ms"] == q.image_link.timestamp_ms
            else:
                assert "timestamp_ms" not in nxt
            svc.submit_answer(sid, qid, "x")
        assert saw_linked

    def test_crash_recovery_replays_log(self, bank, graph, tmp_path):
        svc = make_service(bank, graph, tmp_path)
        sid = svc.create_session("s1")["session_id"]
        ids = svc.sessions[sid].quiz.question_ids
        svc.submit_answer(sid, ids[0], bank.question_by_id(ids[0]).model_answer)
        svc.submit_answer(sid, ids[1], "wrong completely")
        before = svc.session_report(sid)

        revived = make_service(bank, graph, tmp_path)  # fresh process over same state
        session = revived.sessions[sid]
        assert session.cursor == 2
        assert session.quiz.question_ids == ids
        assert revived.session_report(sid) == before
        nxt = revived.next_question(sid)
        assert nxt["question_id"] == ids[2]

    def test_concurrent_sessions_isolated(self, bank, graph, tmp_path):
        svc = make_service(bank, graph, tmp_path)
        sids = [svc.create_session(f"stu-{i}")["session_id"] for i in range(6)]
        errors = []

        def answer_all(sid):
            try:
                for qid in svc.sessions[sid].quiz.question_ids:
                    svc.submit_answer(sid, qid, "gradient descent")
            except Exception as exc:  # pragma: no cover
                errors.append(exc)

        threads = [threading.Thread(target=answer_all, args=(sid,)) for sid in sids]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert not errors
        for sid in sids:
            session = svc.sessions[sid]
            assert session.cursor == len(session.quiz.question_ids)

    def test_bank_never_mutated(self, data_dir, bank, graph, tmp_path):
        digest = hashlib.sha256((data_dir / GOLDEN).read_bytes()).hexdigest()
        svc = make_service(bank, graph, tmp_path)
        sid = svc.create_session("s1")["session_id"]
        for qid in svc.sessions[sid].quiz.question_ids:
            svc.submit_answer(sid, qid, "anything at all")
        assert hashlib.sha256((data_dir / GOLDEN).read_bytes()).hexdigest() == digest


@pytest.fixture()
def http_service(bank, graph, tmp_path):
    frames = tmp_path / "frames"
    frames.mkdir()
    (frames / "eq.png").write_bytes(b"\x89PNG fake image bytes")
    svc = make_service(bank, graph, tmp_path / "state", frames_dir=frames)
    server = make_server(svc, port=0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    base = f"http://127.0.0.1:{server.server_address[1]}"
    yield base, svc
    server.shutdown()
    server.server_close()


class TestHttpApi:
    def test_full_session_over_http(self, http_service, bank, graph):
        base, _ = http_service
        with httpx.Client(base_url=base) as client:
            created = client.post("/v1/sessions", json={"student_id": "http-1"})
            assert created.status_code == 200
            sid = created.json()["session_id"]
            count = created.json()["question_count"]
            grades = []
            for _ in range(count):
                nxt = client.get(f"/v1/sessions/{sid}/next").json()
                question = bank.question_by_id(nxt["question_id"])
                reply = client.post(
                    f"/v1/sessions/{sid}/answers",
                    json={"question_id": nxt["question_id"], "answer_text": question.model_answer},
                ).json()
                grades.append(reply["grade"])
                assert reply["model_answer"] == question.model_answer
            assert client.get(f"/v1/sessions/{sid}/next").json() == {"done": True}
            report = client.get(f"/v1/sessions/{sid}/report").json()
            assert report["counts"]["HIGH"] == count
            assert grades == ["HIGH"] * count

    def test_http_error_codes(self, http_service):
        base, _ = http_service
        with httpx.Client(base_url=base) as client:
            assert client.post("/v1/sessions", json={}).status_code == 400
            assert client.get("/v1/sessions/ghost/next").status_code == 404
            assert client.get("/v1/sessions/ghost/report").status_code == 404
            created = client.post("/v1/sessions", json={"student_id": "x"}).json()
            out_of_order = client.post(
                f"/v1/sessions/{created['session_id']}/answers",
                json={"question_id": "q9999", "answer_text": "y"},
            )
            assert out_of_order.status_code == 409
            assert client.get("/no/such/route").status_code == 404

    def test_frames_route(self, http_service):
        base, _ = http_service
        with httpx.Client(base_url=base) as client:
            ok = client.get("/frames/eq.png")
            assert ok.status_code == 200
            assert ok.headers["content-type"] == "image/png"
            assert ok.content.startswith(b"\x89PNG")
            assert client.get("/frames/missing.png").status_code == 404

    def test_same_student_same_quiz_over_http(self, http_service):
        base, svc = http_service
        with httpx.Client(base_url=base) as client:
            a = client.post("/v1/sessions", json={"student_id": "twin"}).json()
            b = client.post("/v1/sessions", json={"student_id": "twin"}).json()
        assert a["session_id"] != b["session_id"]
        assert (
            svc.sessions[a["session_id"]].quiz.question_ids
            == svc.sessions[b["session_id"]].quiz.question_ids
        )
