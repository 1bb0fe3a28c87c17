from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict
from typing import List, Tuple, Type


class Settings(BaseSettings):
    APP_NAME: str = "Runcount API"
    VERSION: str = "1.0.0"
    API_V1_PREFIX: str = "/api/v1"

    # CORS
    CORS_ORIGINS: List[str] = ["http://localhost:3000", "http://localhost:5173"]

    LOG_LEVEL: str = "WARNING"

    # Brute-force enumeration guard (2^(n-1) words)
    ORACLE_MAX_N: int = 30

    # Largest word length accepted over HTTP
    API_MAX_N: int = 2000

    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True)


class CliSettings(Settings):
    """Settings built from command-line flags only."""

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)


settings = Settings()
