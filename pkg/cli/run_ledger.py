# cli/run_ledger.py

import csv
import datetime
import os

from config.settings import RUN_LEDGER_PATH


class RunLedger:
    """
    Logs every CLI run into ONE master CSV file.
    """

    HEADER = ["date", "time", "command", "file", "state", "exit_code", "detail"]

    def __init__(self, file_path=RUN_LEDGER_PATH):
        self.file_path = file_path
        directory = os.path.dirname(self.file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        self._ensure_header()

    def _ensure_header(self):
        if not os.path.exists(self.file_path):
            with open(self.file_path, mode="w", newline="") as f:
                csv.writer(f).writerow(self.HEADER)

    def log_run(
        self,
        command: str,
        file: str,
        state: str,
        exit_code: int,
        detail: str = "",
        when: datetime.datetime = None,
    ):
        when = when or datetime.datetime.now()
        with open(self.file_path, mode="a", newline="") as f:
            csv.writer(f).writerow([
                when.date().isoformat(),
                when.strftime("%H:%M:%S"),
                command,
                file,
                state,
                exit_code,
                detail,
            ])
