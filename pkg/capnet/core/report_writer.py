"""
CSV writer for per-query simulation rows.
"""
import csv
from pathlib import Path
from typing import Iterable, Optional, TextIO

from .reports import QueryRecordModel

PATH_SEPARATOR = ">"


class QueryCsvWriter:
    """Writes one CSV row per routing query, to a file or an open stream."""

    header = [
        'index',
        'source', 'target',
        'local_path', 'local_weight', 'local_hops', 'local_index', 'local_hits_cover',
        'global_status', 'global_reason', 'global_path', 'global_hops', 'global_index',
        'global_avoids_cover',
        'certified',
        'hop_stretch',
    ]

    def __init__(self, path: Optional[str] = None, stream: Optional[TextIO] = None, logger=None):
        if (path is None) == (stream is None):
            raise ValueError("give exactly one of path or stream")
        self.logger = logger
        self.path = Path(path) if path is not None else None
        if self.path is not None:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self.file_handle = open(self.path, 'w', newline='')
        else:
            self.file_handle = stream
        self.writer = csv.DictWriter(self.file_handle, fieldnames=self.header, lineterminator="\n")
        self.writer.writeheader()
        if self.logger and self.path is not None:
            self.logger.info(f"[QueryCsvWriter] Writing per-query rows to: {self.path}")

    @staticmethod
    def _cell(value):
        if value is None:
            return ''
        if isinstance(value, bool):
            return 'true' if value else 'false'
        if isinstance(value, list):
            return PATH_SEPARATOR.join(value)
        if isinstance(value, float):
            return f"{value:.6g}"
        return value

    def write_record(self, record: QueryRecordModel):
        row = {name: self._cell(getattr(record, name)) for name in self.header}
        self.writer.writerow(row)
        self.file_handle.flush()

    def write_all(self, records: Iterable[QueryRecordModel]):
        for record in records:
            self.write_record(record)

    def close(self):
        """Closes the file handle; streams passed in stay open."""
        if self.path is not None and self.file_handle:
            self.file_handle.close()
            self.file_handle = None
            if self.logger:
                self.logger.debug("[QueryCsvWriter] CSV file closed.")
