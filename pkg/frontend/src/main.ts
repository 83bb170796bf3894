import { ApiClient } from "./api.js";
import { EditorStore } from "./state.js";
import { EditorView } from "./view.js";

declare global {
	interface Window {
		TTSFE_SERVICE_URL?: string;
	}
}

const root = document.getElementById("app");
if (root) {
	const api = new ApiClient(window.TTSFE_SERVICE_URL ?? "");
	const store = new EditorStore(api);
	new EditorView(root, store);
}
