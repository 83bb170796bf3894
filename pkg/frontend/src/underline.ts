import type { AnalysisReport, Suggestion } from "./types.js";

export interface Decoration {
	start: number;
	end: number;
	text: string;
	suggestions: Suggestion[];
}

/**
 * Underline decorations for the current text: one per misspelling, and only
 * when the report actually describes this text (stale reports yield none).
 */
export function misspellingDecorations(
	text: string,
	report: AnalysisReport | null,
): Decoration[] {
	if (!report || report.source !== text) {
		return [];
	}
	return report.misspellings.map((m) => ({
		start: m.span[0],
		end: m.span[1],
		text: m.text,
		suggestions: [...m.suggestions].sort((a, b) => a.rank - b.rank),
	}));
}

function escapeHtml(s: string): string {
	return s
		.replace(/&/g, "&amp;")
		.replace(/</g, "&lt;")
		.replace(/>/g, "&gt;");
}

/** Backdrop HTML: the text with misspelled spans wrapped in <mark> tags. */
export function highlightHtml(text: string, decorations: Decoration[]): string {
	const parts: string[] = [];
	let pos = 0;
	for (const d of decorations) {
		parts.push(escapeHtml(text.slice(pos, d.start)));
		parts.push(
			`<mark class="misspelled" data-start="${d.start}" data-end="${d.end}">` +
				escapeHtml(text.slice(d.start, d.end)) +
				"</mark>",
		);
		pos = d.end;
	}
	parts.push(escapeHtml(text.slice(pos)));
	return parts.join("");
}
