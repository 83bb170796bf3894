import { ApiClient } from "./api.js";
import { Debouncer } from "./debounce.js";
import type { AnalysisReport, Misspelling } from "./types.js";

export interface EditorState {
	text: string;
	/** Report for the current text, or null while none is valid (stale/pending). */
	report: AnalysisReport | null;
	pending: boolean;
	error: string | null;
	canUndo: boolean;
}

interface HistoryEntry {
	text: string;
	report: AnalysisReport | null;
}

export interface StoreOptions {
	debounceMs?: number;
	analyzeOptions?: { topk?: number; max_distance?: number };
}

/**
 * Holds the document and the last analysis that matches it.
 *
 * Rules: at most one analyze request is in flight (newer input aborts the
 * older request); a response is dropped unless the text it was computed for
 * is still the current text; edits immediately invalidate the old report so
 * underlines and phonemes never describe text that is no longer displayed.
 */
export class EditorStore {
	private state: EditorState = {
		text: "",
		report: null,
		pending: false,
		error: null,
		canUndo: false,
	};
	private listeners = new Set<(s: EditorState) => void>();
	private history: HistoryEntry[] = [];
	private debouncer: Debouncer;
	private revision = 0;
	private inFlight: AbortController | null = null;

	constructor(
		private api: ApiClient,
		private options: StoreOptions = {},
	) {
		this.debouncer = new Debouncer(options.debounceMs ?? 300);
	}

	getState(): EditorState {
		return { ...this.state };
	}

	subscribe(listener: (s: EditorState) => void): () => void {
		this.listeners.add(listener);
		return () => this.listeners.delete(listener);
	}

	private notify(): void {
		const snapshot = this.getState();
		for (const listener of this.listeners) {
			listener(snapshot);
		}
	}

	/** User typed: discard the stale report and re-analyze after the debounce. */
	setText(text: string): void {
		if (text === this.state.text) {
			return;
		}
		this.revision++;
		this.state = { ...this.state, text, report: null, pending: true };
		this.notify();
		this.debouncer.schedule(() => void this.runAnalyze());
	}

	/** The misspelling at a given text offset, if the report is current. */
	misspellingAt(offset: number): Misspelling | null {
		const report = this.state.report;
		if (!report) {
			return null;
		}
		return (
			report.misspellings.find(
				(m) => m.span[0] <= offset && offset < m.span[1],
			) ?? null
		);
	}

	/**
	 * Apply one suggestion: replace the span, remember the previous state for
	 * undo, and re-analyze immediately (no debounce).
	 */
	chooseSuggestion(span: [number, number], candidate: string): void {
		const report = this.state.report;
		if (!report) {
			return;
		}
		const target = report.misspellings.find(
			(m) => m.span[0] === span[0] && m.span[1] === span[1],
		);
		if (!target || !target.suggestions.some((s) => s.candidate === candidate)) {
			return;
		}
		this.history.push({ text: this.state.text, report });
		const text =
			this.state.text.slice(0, span[0]) + candidate + this.state.text.slice(span[1]);
		this.revision++;
		this.state = { ...this.state, text, report: null, pending: true, canUndo: true };
		this.notify();
		this.debouncer.cancel();
		void this.runAnalyze();
	}

	/** Restore the text and report from before the last applied suggestion. */
	undo(): void {
		const entry = this.history.pop();
		if (!entry) {
			return;
		}
		this.revision++;
		this.debouncer.cancel();
		this.inFlight?.abort();
		this.inFlight = null;
		this.state = {
			...this.state,
			text: entry.text,
			report: entry.report,
			pending: false,
			error: null,
			canUndo: this.history.length > 0,
		};
		this.notify();
	}

	/** Force the debounced analysis to run now (used by tests and on blur). */
	flush(): void {
		this.debouncer.flush();
	}

	private async runAnalyze(): Promise<void> {
		this.inFlight?.abort();
		const controller = new AbortController();
		this.inFlight = controller;
		const revision = this.revision;
		const text = this.state.text;
		try {
			const report = await this.api.analyze(
				text,
				this.options.analyzeOptions ?? {},
				controller.signal,
			);
			if (revision !== this.revision || text !== this.state.text) {
				return; // superseded by newer input: drop the stale report
			}
			this.state = { ...this.state, report, pending: false, error: null };
			this.notify();
		} catch (err) {
			if (controller.signal.aborted || revision !== this.revision) {
				return;
			}
			// Keep the edited text; the report stays stale and the UI shows
			// a non-blocking banner.
			const message = err instanceof Error ? err.message : String(err);
			this.state = { ...this.state, pending: false, error: message };
			this.notify();
		} finally {
			if (this.inFlight === controller) {
				this.inFlight = null;
			}
		}
	}
}
