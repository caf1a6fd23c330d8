"""
Run logging: a JSONL event log and bracketed console messages.
"""
import datetime
import json
import time
from pathlib import Path
from typing import Any, Dict, List, Optional

try:
    from colorama import Fore, Style, init as colorama_init
    colorama_init(autoreset=True)
    COLORAMA_AVAILABLE = True
except ImportError:
    COLORAMA_AVAILABLE = False

    class _NoColor:
        def __getattr__(self, name):
            return ""

    Fore = _NoColor()
    Style = _NoColor()


class RunLog:
    """Appends one JSON object per event to a log file and keeps them in memory."""

    def __init__(self, path: Optional[str] = None, verbose: bool = False):
        """
        Args:
            path: JSONL file to append to; None keeps the log in memory only
            verbose: echo events to the console as "[component] message"
        """
        self.path = Path(path) if path else None
        self.verbose = verbose
        self.session_id = int(time.time())
        self.entries: List[Dict[str, Any]] = []
        if self.path is not None:
            self.path.parent.mkdir(parents=True, exist_ok=True)

    def event(self, name: str, payload: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """Record one event; the name is "component.what", e.g. "sweep.place"."""
        entry = {
            "timestamp": datetime.datetime.now().isoformat(),
            "session_id": self.session_id,
            "event": name,
            "payload": dict(payload or {}),
        }
        self.entries.append(entry)
        if self.path is not None:
            with open(self.path, "a", encoding="utf-8") as f:
                f.write(json.dumps(entry, default=str) + "\n")
        return entry

    def info(self, component: str, message: str) -> None:
        """Console line, shown only in verbose mode."""
        if self.verbose:
            console(component, message)

    def start_new_session(self) -> None:
        self.session_id = int(time.time())

    def __len__(self) -> int:
        return len(self.entries)


def console(component: str, message: str, ok: Optional[bool] = None) -> None:
    """Print "[component] message", green/red when ``ok`` is given."""
    color = "" if ok is None else (Fore.GREEN if ok else Fore.RED)
    print(f"{Style.BRIGHT}[{component}]{Style.RESET_ALL} {color}{message}")
