"""
Run logger with optional incremental log files
"""

import sys
import time
from datetime import datetime
from pathlib import Path
from typing import Optional, TextIO

LEVELS = {"debug": 10, "info": 20, "warning": 30, "error": 40}


class RunLogger:
    """Levelled logger: coloured lines on stderr, optionally mirrored to a run log file"""

    def __init__(self,
                 level: str = "info",
                 log_dir: str = "logs",
                 max_logs: int = 0,
                 to_file: bool = False,
                 run_name: str = "capnet",
                 stream: Optional[TextIO] = None):
        """
        Initialize logger

        Args:
            level: Minimum level printed and written
            log_dir: Directory to store run log files
            max_logs: Maximum number of run logs to keep (0 = unlimited)
            to_file: Write a timestamped log file per run
            run_name: Prefix for log file names
            stream: Console stream (stderr by default, stdout carries results)
        """
        self.level = LEVELS[level]
        self.run_name = run_name
        self.stream = stream
        self.log_file: Optional[Path] = None
        self.index_file: Optional[Path] = None

        if to_file:
            self.log_dir = Path(log_dir)
            self.max_logs = max_logs
            self.log_dir.mkdir(parents=True, exist_ok=True)

            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            run_number = self._get_next_run_number()
            self.log_file = self.log_dir / f"{self.run_name}_run_{run_number:04d}_{timestamp}.log"
            self.index_file = self.log_dir / f"{self.run_name}_run_index.txt"
            self._write_header()

            if self.max_logs > 0:
                self._cleanup_old_logs()

    def _get_next_run_number(self) -> int:
        """Get the next sequential run number"""
        log_files = sorted(self.log_dir.glob(f"{self.run_name}_run_*.log"))
        if not log_files:
            return 1
        try:
            # "<run_name>_run_NNNN_timestamp"
            return int(log_files[-1].stem.split("_run_")[1].split("_")[0]) + 1
        except (IndexError, ValueError):
            return 1

    def _write_header(self):
        header = f"""
{'='*70}
CAPNET RUN LOG ({self.run_name})
{'='*70}
Log File: {self.log_file.name}
Start Time: {datetime.now().strftime("%Y-%m-%d %H:%M:%S")}
{'='*70}

"""
        with open(self.log_file, "w") as f:
            f.write(header)

    def _cleanup_old_logs(self):
        """Remove old log files if we exceed max_logs"""
        log_files = sorted(self.log_dir.glob(f"{self.run_name}_run_*.log"))
        if len(log_files) > self.max_logs:
            for old_log in log_files[:-self.max_logs]:
                old_log.unlink()
                self.log(f"Removed old log: {old_log.name}", "debug")

    def log(self, message: str, level: str = "info"):
        """Log a message with the specified level"""
        if LEVELS.get(level, 20) < self.level:
            return
        timestamp = time.strftime("%Y-%m-%d %H:%M:%S")
        log_line = f"[{timestamp}] [{level.upper()}] {message}"

        if self.log_file is not None:
            with open(self.log_file, "a") as f:
                f.write(log_line + "\n")

        colors = {
            "error": "\033[91m",    # Red
            "warning": "\033[93m",  # Yellow
            "info": "\033[0m",      # Default
            "debug": "\033[90m",    # Gray
        }
        reset = "\033[0m"
        stream = self.stream or sys.stderr
        if stream.isatty():
            stream.write(f"{colors.get(level, colors['info'])}{log_line}{reset}\n")
        else:
            stream.write(log_line + "\n")

    def debug(self, message: str):
        self.log(message, "debug")

    def info(self, message: str):
        self.log(message, "info")

    def warning(self, message: str):
        self.log(message, "warning")

    def error(self, message: str):
        self.log(message, "error")

    def log_summary(self, summary_data: dict):
        """Log a run summary and update the index"""
        self.log("=" * 70)
        self.log("RUN SUMMARY")
        self.log("=" * 70)
        for key, value in summary_data.items():
            self.log(f"{key}: {value}")
        self.log("=" * 70)
        if self.index_file is not None:
            self._update_index(summary_data)

    def _update_index(self, summary_data: dict):
        index_line = (
            f"{datetime.now().strftime('%Y-%m-%d %H:%M:%S')} | "
            f"{self.log_file.name} | "
            f"Command: {summary_data.get('Command', 'N/A')} | "
            f"Status: {summary_data.get('Status', 'N/A')}\n"
        )
        if not self.index_file.exists():
            with open(self.index_file, "w") as f:
                f.write(f"RUN INDEX ({self.run_name})\n")
                f.write("=" * 90 + "\n")
                f.write(f"{'Timestamp':<20} | {'Log File':<40} | {'Command':<12} | {'Status':<10}\n")
                f.write("=" * 90 + "\n")
        with open(self.index_file, "a") as f:
            f.write(index_line)

    def get_log_path(self) -> Optional[Path]:
        return self.log_file
