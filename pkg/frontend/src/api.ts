import type { AnalysisReport, AnalyzeOptions } from "./types.js";

export class ApiError extends Error {
	constructor(public status: number, message: string) {
		super(message);
	}
}

/** Thin client for the analysis service; the base URL is the only config. */
export class ApiClient {
	constructor(
		private baseUrl: string = "",
		private fetchFn: typeof fetch = (...args) => fetch(...args),
	) {}

	async analyze(
		text: string,
		options: AnalyzeOptions = {},
		signal?: AbortSignal,
	): Promise<AnalysisReport> {
		const resp = await this.fetchFn(`${this.baseUrl}/api/analyze`, {
			method: "POST",
			headers: { "content-type": "application/json" },
			body: JSON.stringify({ text, options: { auto_correct: false, ...options } }),
			signal,
		});
		if (!resp.ok) {
			throw new ApiError(resp.status, `analyze failed: ${resp.status}`);
		}
		return (await resp.json()) as AnalysisReport;
	}
}
