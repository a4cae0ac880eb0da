"""
Verify Worker

Runs verification jobs, in-process or fanned out to a process pool.
Results are always returned in submission order.
"""

from multiprocessing import Pool
from multiprocessing.pool import Pool as PoolType

from app.core.logging import get_logger
from app.features.verify import service
from app.features.verify.schema import Report, VerifyJob

logger = get_logger(__name__)


class VerifyWorker:
    """Worker pool for verification jobs."""

    def __init__(self):
        self.is_running = False
        self.pool: PoolType | None = None
        self.processes = 0

        # Statistics of the current run
        self.current_run_stats = {
            "submitted": 0,
            "completed": 0,
            "failed_checks": 0,
        }

    def start(self, processes: int) -> None:
        """
        Start the process pool.

        Args:
            processes: Number of worker processes (> 1)
        """
        if not self.is_running:
            self.pool = Pool(processes=processes)
            self.processes = processes
            self.is_running = True
            logger.info(f"Verify worker started with {processes} processes")

    def stop(self) -> None:
        """Terminate the process pool."""
        if self.pool is not None:
            self.pool.close()
            self.pool.join()
            self.pool = None
        self.is_running = False
        logger.info("Verify worker stopped")

    def run(self, jobs: list[VerifyJob]) -> list[Report]:
        """
        Run jobs and return their reports in submission order.

        Args:
            jobs: Jobs to run

        Returns:
            list: One report per job
        """
        self.current_run_stats = {"submitted": len(jobs), "completed": 0, "failed_checks": 0}

        if self.pool is None:
            reports = []
            for job in jobs:
                reports.append(self._record(service.run_job(job)))
            return reports

        pending = [self.pool.apply_async(service.run_job, (job,)) for job in jobs]
        return [self._record(result.get()) for result in pending]

    def _record(self, report: Report) -> Report:
        self.current_run_stats["completed"] += 1
        self.current_run_stats["failed_checks"] += report.failed
        return report


worker = VerifyWorker()
