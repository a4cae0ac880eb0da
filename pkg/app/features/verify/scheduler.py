"""
Verify Scheduler

Scheduler facade for the verify worker.
"""

from app.core.logging import get_logger
from app.features.verify.schema import Report, VerifyJob
from app.features.verify.worker import worker

logger = get_logger(__name__)


class VerifyScheduler:
    """Scheduler facade for the verify worker."""

    @property
    def is_running(self) -> bool:
        """Check if a worker pool is alive."""
        return worker.is_running

    def run(self, jobs: list[VerifyJob], workers: int = 1) -> list[Report]:
        """
        Run jobs, starting a pool first when more than one worker is asked for.

        Args:
            jobs: Jobs to run
            workers: Number of processes; 1 runs in-process
        """
        if workers > 1 and len(jobs) > 1:
            worker.start(processes=min(workers, len(jobs)))
            logger.info(f"Verify scheduler dispatching {len(jobs)} jobs")
        return worker.run(jobs)

    def stop(self) -> None:
        """Stop the worker pool."""
        worker.stop()


scheduler = VerifyScheduler()
