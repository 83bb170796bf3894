/** Trailing-edge debouncer; `flush` fires a pending call immediately. */
export class Debouncer {
	private timer: ReturnType<typeof setTimeout> | null = null;
	private pending: (() => void) | null = null;

	constructor(private delayMs: number) {}

	schedule(fn: () => void): void {
		this.pending = fn;
		if (this.timer !== null) {
			clearTimeout(this.timer);
		}
		this.timer = setTimeout(() => this.flush(), this.delayMs);
	}

	flush(): void {
		if (this.timer !== null) {
			clearTimeout(this.timer);
			this.timer = null;
		}
		const fn = this.pending;
		this.pending = null;
		if (fn) {
			fn();
		}
	}

	cancel(): void {
		if (this.timer !== null) {
			clearTimeout(this.timer);
			this.timer = null;
		}
		this.pending = null;
	}
}
