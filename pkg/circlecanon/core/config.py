from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="CIRCLECANON_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )

    # App
    APP_NAME: str = "circlecanon"
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"

    # Prime nodes without a given representation are searched by brute force up to this size
    BRUTE_FORCE_REP_MAX_CHORDS: int = 10

    # Oracle size caps
    ORACLE_ISO_MAX_VERTICES: int = 9
    ORACLE_SPLITS_MAX_VERTICES: int = 7
    ORACLE_REP_MAX_VERTICES: int = 10
    ORACLE_CANON_MAX_VERTICES: int = 8

    # Sanity checks
    VERIFY_NODE_REPRESENTATIONS: bool = True
    CHECK_TREE_INVARIANTS: bool = True

    # Pinned constant C of the linear encoding bound len <= C * (n + m)
    ENCODING_LENGTH_CONSTANT: int = 12

    @property
    def log_level(self) -> str:
        return self.LOG_LEVEL.upper()


settings = Settings()
