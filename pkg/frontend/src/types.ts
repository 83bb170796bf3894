// Wire types for the analysis service (schema_version 1).

export interface Suggestion {
	candidate: string;
	distance: number;
	frequency: number;
	rank: number;
}

export interface Misspelling {
	span: [number, number];
	text: string;
	suggestions: Suggestion[];
}

export interface AnalysisReport {
	schema_version: string;
	source: string;
	tokens: { text: string; kind: string; span: [number, number] }[];
	misspellings: Misspelling[];
	corrected: string;
	applied: { span: [number, number]; replacement: string }[];
	normalized: string[];
	wx: (string | null)[];
	phonemes: { words: (string | null)[]; sentence: string };
	unresolved: { kind: string; span: [number, number]; text: string; detail: string }[];
}

export interface AnalyzeOptions {
	topk?: number;
	max_distance?: number;
	auto_correct?: boolean;
}
