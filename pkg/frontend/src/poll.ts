// Archive jobs are minutes-scale, so a 1 s poll is plenty.

import { api, type JobJson } from "./api";

export const JOB_POLL_INTERVAL_MS = 1000;

function delay(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

export async function pollJob(
  jobId: string,
  onUpdate: (job: JobJson) => void,
  intervalMs: number = JOB_POLL_INTERVAL_MS,
): Promise<JobJson> {
  for (;;) {
    const job = await api.job(jobId);
    onUpdate(job);
    if (job.status === "DONE" || job.status === "FAILED") {
      return job;
    }
    await delay(intervalMs);
  }
}
