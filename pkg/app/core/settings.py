from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    app_name: str = "D21 Category O Engine"
    debug: bool = False

    # Output format for CLI results: "json" or "text"
    output_format: str = "json"

    # Parameter used when --zeta is omitted ("generic" or "p/d")
    default_zeta: str = "generic"

    # Verification defaults
    verify_range: int = 5
    char_height: int = 8
    verma_window: int = 24
    max_singular_n: int = 4
    max_expansion_n: int = 3
    scan_radius: int = 3
    sample_size: int = 10
    separation_samples: int = 10000
    seed: int = 20240611

    # Verification worker pool (1 = run in-process)
    workers: int = 1

    class Config:
        env_file = ".env"


settings = Settings()
