import { mountPanel } from "./ui.js";

const params = new URLSearchParams(window.location.search);
const baseUrl = params.get("service") ?? "http://127.0.0.1:8000";
const root = document.getElementById("app");
if (root) mountPanel(root, baseUrl);
