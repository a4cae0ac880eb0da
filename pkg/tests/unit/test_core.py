import json
import logging
from fractions import Fraction

from pydantic import ValidationError

from app.core.exceptions import PoleException, UsageException, VerificationFailedException
from app.core.handlers import handle_app_exception, handle_unexpected_exception, handle_validation_exception
from app.core.logging import StructuredFormatter, bind_run_fields, clear_run_context, set_run_context
from app.features.weights.schema import Parameter
from app.middlewares.logging_middleware import CommandLoggingMiddleware
from app.utils.response import emit, error


class TestExceptions:
    def test_exit_codes(self):
        assert UsageException().exit_code == 2
        assert PoleException().exit_code == 3
        assert VerificationFailedException().exit_code == 1


class TestHandlers:
    def test_app_exception(self):
        code, payload = handle_app_exception(PoleException("Denominator zeta - 1 vanishes at zeta=1/1"))
        assert code == 3
        assert payload == {"success": False, "message": "Denominator zeta - 1 vanishes at zeta=1/1"}

    def test_validation_exception(self):
        try:
            Parameter.rational(2, 4)
        except ValidationError as exc:
            code, payload = handle_validation_exception(exc)
        assert code == 2
        assert "lowest terms" in payload["message"]

    def test_unexpected_exception_hides_detail(self):
        code, payload = handle_unexpected_exception(RuntimeError("boom"))
        assert code == 3
        assert "error" not in payload


class TestResponse:
    def test_error_payload(self):
        assert error("bad", "detail") == {"success": False, "message": "bad", "error": "detail"}

    def test_emit_json_is_deterministic(self):
        payload = {"0,0,0": 1, "1,-1,-1": 2}
        assert emit("json", payload) == emit("json", payload)
        assert json.loads(emit("json", payload)) == payload
        assert emit("json", {}) == "{}\n"

    def test_emit_text_uses_renderer(self):
        assert emit("text", {}, lambda data: "(empty)") == "(empty)\n"

    def test_emit_passes_strings_through(self):
        assert emit("json", "{\n}") == "{\n}\n"


class TestLogging:
    def test_structured_formatter_includes_run_context(self):
        set_run_context("abc12345", {"command": "flag"})
        try:
            record = logging.LogRecord("app", logging.INFO, __file__, 1, "hello", None, None)
            data = json.loads(StructuredFormatter().format(record))
        finally:
            clear_run_context()
        assert data["message"] == "hello"
        assert data["run_id"] == "abc12345"
        assert data["command"] == "flag"

    def test_bound_fields_render_exact_values(self):
        set_run_context("abc12345", {"command": "verify"})
        try:
            bind_run_fields(zeta=Fraction(3, 2), suite=None)
            record = logging.LogRecord("app", logging.INFO, __file__, 1, "sweep done", None, None)
            record.extra_fields = {"casimir": Fraction(-15, 4)}
            data = json.loads(StructuredFormatter().format(record))
        finally:
            clear_run_context()
        assert data["zeta"] == "3/2"
        assert "suite" not in data
        assert data["casimir"] == "-15/4"
        assert "worker" not in data


class TestMiddleware:
    def test_dispatch_returns_exit_code(self):
        assert CommandLoggingMiddleware().dispatch("classify", lambda: 0) == 0

    def test_log_levels(self):
        middleware = CommandLoggingMiddleware()
        assert middleware._get_log_level(0, 5) == "INFO"
        assert middleware._get_log_level(0, 20000) == "WARNING"
        assert middleware._get_log_level(1, 5) == "WARNING"
        assert middleware._get_log_level(3, 5) == "ERROR"

    def test_failing_command_logged_as_error(self, mocker):
        logger = mocker.patch("app.middlewares.logging_middleware.logger")
        CommandLoggingMiddleware().dispatch("verify", lambda: 2)
        logger.error.assert_called_once()
