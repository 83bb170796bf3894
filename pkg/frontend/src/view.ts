import { EditorStore, EditorState } from "./state.js";
import { Decoration, highlightHtml, misspellingDecorations } from "./underline.js";

/**
 * DOM component: a textarea over a highlight backdrop, a rank-ordered
 * suggestion menu (mouse and keyboard), a phoneme panel with a staleness
 * badge, an error banner, and an undo button.
 *
 * Open the menu by clicking inside an underlined word or pressing
 * Ctrl+. (or F2) with the caret in one; ArrowUp/ArrowDown move, Enter
 * applies, Escape closes.
 */
export class EditorView {
	readonly input: HTMLTextAreaElement;
	readonly backdrop: HTMLElement;
	readonly menu: HTMLUListElement;
	readonly phonemePanel: HTMLElement;
	readonly staleBadge: HTMLElement;
	readonly errorBanner: HTMLElement;
	readonly undoButton: HTMLButtonElement;

	private menuSpan: [number, number] | null = null;
	private menuIndex = 0;

	constructor(
		root: HTMLElement,
		private store: EditorStore,
	) {
		root.innerHTML = `
			<div class="editor">
				<div class="editor-stack">
					<div class="editor-backdrop" aria-hidden="true"></div>
					<textarea class="editor-input" lang="hi" spellcheck="false"
						aria-label="Hindi text"></textarea>
				</div>
				<ul class="suggestion-menu" role="listbox" hidden></ul>
				<div class="error-banner" role="alert" hidden></div>
				<div class="phoneme-row">
					<span class="phoneme-label">phonemes</span>
					<span class="stale-badge" hidden>waiting…</span>
					<output class="phoneme-panel" aria-live="polite"></output>
				</div>
				<button type="button" class="undo-button" disabled>undo</button>
			</div>`;
		this.input = root.querySelector(".editor-input") as HTMLTextAreaElement;
		this.backdrop = root.querySelector(".editor-backdrop") as HTMLElement;
		this.menu = root.querySelector(".suggestion-menu") as HTMLUListElement;
		this.phonemePanel = root.querySelector(".phoneme-panel") as HTMLElement;
		this.staleBadge = root.querySelector(".stale-badge") as HTMLElement;
		this.errorBanner = root.querySelector(".error-banner") as HTMLElement;
		this.undoButton = root.querySelector(".undo-button") as HTMLButtonElement;

		this.input.addEventListener("input", () => {
			this.closeMenu();
			this.store.setText(this.input.value);
		});
		this.input.addEventListener("click", () => this.openMenuAtCaret());
		this.input.addEventListener("keydown", (ev) => this.onEditorKey(ev));
		this.menu.addEventListener("keydown", (ev) => this.onMenuKey(ev));
		this.undoButton.addEventListener("click", () => this.store.undo());

		store.subscribe((s) => this.render(s));
		this.render(store.getState());
	}

	get decorations(): Decoration[] {
		const s = this.store.getState();
		return misspellingDecorations(s.text, s.report);
	}

	private render(s: EditorState): void {
		if (this.input.value !== s.text) {
			this.input.value = s.text;
		}
		this.backdrop.innerHTML = highlightHtml(s.text, misspellingDecorations(s.text, s.report));
		const fresh = s.report !== null && !s.pending;
		this.staleBadge.hidden = fresh;
		this.phonemePanel.textContent = s.report ? s.report.phonemes.sentence : "";
		this.errorBanner.hidden = s.error === null;
		this.errorBanner.textContent = s.error ?? "";
		this.undoButton.disabled = !s.canUndo;
		if (this.menuSpan && !s.report) {
			this.closeMenu();
		}
	}

	openMenuAtCaret(): void {
		const offset = this.input.selectionStart ?? 0;
		const hit = this.store.misspellingAt(offset);
		if (!hit) {
			this.closeMenu();
			return;
		}
		this.menuSpan = hit.span;
		this.menuIndex = 0;
		const items = [...hit.suggestions]
			.sort((a, b) => a.rank - b.rank)
			.map(
				(s, i) =>
					`<li role="option" tabindex="-1" data-candidate="${s.candidate}"` +
					` data-index="${i}">${s.candidate}` +
					` <small>d${s.distance}</small></li>`,
			);
		this.menu.innerHTML = items.length ? items.join("") : "<li class=\"empty\">no suggestions</li>";
		this.menu.hidden = false;
		for (const li of this.menu.querySelectorAll("li[data-candidate]")) {
			li.addEventListener("click", () => {
				this.applyCandidate((li as HTMLElement).dataset.candidate ?? "");
			});
		}
		this.highlightMenuItem();
		(this.menu as HTMLElement).focus?.();
	}

	closeMenu(): void {
		this.menu.hidden = true;
		this.menu.innerHTML = "";
		this.menuSpan = null;
	}

	private highlightMenuItem(): void {
		this.menu.querySelectorAll("li").forEach((li, i) => {
			li.classList.toggle("active", i === this.menuIndex);
		});
	}

	private applyCandidate(candidate: string): void {
		if (this.menuSpan && candidate) {
			this.store.chooseSuggestion(this.menuSpan, candidate);
		}
		this.closeMenu();
		this.input.focus?.();
	}

	private onEditorKey(ev: KeyboardEvent): void {
		if ((ev.ctrlKey && ev.key === ".") || ev.key === "F2") {
			ev.preventDefault();
			this.openMenuAtCaret();
			return;
		}
		if (!this.menu.hidden) {
			this.onMenuKey(ev);
		}
	}

	private onMenuKey(ev: KeyboardEvent): void {
		if (this.menu.hidden) {
			return;
		}
		const count = this.menu.querySelectorAll("li[data-candidate]").length;
		if (ev.key === "ArrowDown" && count > 0) {
			this.menuIndex = (this.menuIndex + 1) % count;
			this.highlightMenuItem();
			ev.preventDefault();
		} else if (ev.key === "ArrowUp" && count > 0) {
			this.menuIndex = (this.menuIndex + count - 1) % count;
			this.highlightMenuItem();
			ev.preventDefault();
		} else if (ev.key === "Enter" && count > 0) {
			const li = this.menu.querySelectorAll("li[data-candidate]")[this.menuIndex];
			this.applyCandidate((li as HTMLElement).dataset.candidate ?? "");
			ev.preventDefault();
		} else if (ev.key === "Escape") {
			this.closeMenu();
			ev.preventDefault();
		}
	}
}
