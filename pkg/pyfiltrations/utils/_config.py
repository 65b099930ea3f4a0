import json
import os

default_config = {
    "ENUMERATION_CAP": 100000,
    "N_JOBS": 1,
}


def _get_user_dir():
    """Get user directory."""
    if os.name.lower() == "nt":
        user_dir = os.getenv("USERPROFILE")
    else:
        user_dir = os.path.expanduser("~")
    return user_dir


def _get_home_dir():
    """Get pyfiltrations config directory."""
    return os.path.join(_get_user_dir(), ".pyfiltrations")


def _get_config_path():
    """Get config path."""
    return os.path.join(_get_home_dir(), "pyfiltrations.json")


def _save_config(config):
    """Save pyfiltrations config."""
    home_dir = _get_home_dir()
    if not os.path.isdir(home_dir):
        os.mkdir(home_dir)
    with open(_get_config_path(), "w", encoding="utf-8") as f:
        json.dump(config, f, indent=2, sort_keys=True)


def get_config():
    """Read preferences from pyfiltrations' config file.

    Keys missing from the file, or all keys if the file does not exist yet, take
    their default value.

    Returns
    -------
    config : dict
        Dictionary containing all preferences as key/values pairs.
    """
    config = dict(default_config)
    config_path = _get_config_path()
    if os.path.isfile(config_path):
        with open(config_path, "r", encoding="utf-8") as f:
            config.update(json.load(f))
    return config


def set_config(key, value):
    """Set preference key in the pyfiltrations' config file.

    Parameters
    ----------
    key : str
        The preference key to set. Must be one of ``'ENUMERATION_CAP'`` or
        ``'N_JOBS'``.
    value : int
        The value to assign to the preference key.
    """
    if key not in default_config:
        raise ValueError("Invalid key")
    config = get_config()
    config[key] = value
    _save_config(config)
