/** Throttled request scheduling with stale-response protection.
 *
 * Every state change bumps the version; at most one batch fires per interval
 * (trailing edge, so a slider drag settles on its final position), and a
 * response is applied only if its version is still current.
 */

export class RequestCoordinator {
  private version = 0;
  private timer: ReturnType<typeof setTimeout> | null = null;

  constructor(
    private readonly intervalMs: number,
    private readonly fire: (version: number) => void,
  ) {}

  /** Record a state change; schedules a fire unless one is already pending. */
  bump(): number {
    this.version += 1;
    if (this.timer === null) {
      this.timer = setTimeout(() => {
        this.timer = null;
        this.fire(this.version);
      }, this.intervalMs);
    }
    return this.version;
  }

  /** True while no newer state version exists than the one given. */
  isCurrent(version: number): boolean {
    return version === this.version;
  }

  dispose(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
  }
}
