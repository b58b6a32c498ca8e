from kempner_series._utils import get_settings


class TestKempnerSettings:
    def test_defaults(self, monkeypatch):
        for name in ("KEMPNER_MAX_ENUM", "KEMPNER_MAX_SCAN", "KEMPNER_INTERVAL_PREC"):
            monkeypatch.delenv(name, raising=False)
        settings = get_settings()
        assert settings.max_enum == 10**8
        assert settings.max_scan == 10**9
        assert settings.interval_precision == 113

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("KEMPNER_MAX_ENUM", "1234")
        monkeypatch.setenv("KEMPNER_LOG_LEVEL", "DEBUG")
        settings = get_settings()
        assert settings.max_enum == 1234
        assert settings.log_level == "DEBUG"
