/** Bootstrap: wires the API client, state transitions, and DOM together. */

import { ApiClient, ServiceUnavailableError } from "./api.js";
import { computeLayout } from "./layout.js";
import { renderGraph, renderNodeDetail } from "./render.js";
import {
  applyFactReport,
  cycleOverlay,
  groupedReportEntries,
  initialState,
  isStale,
  overlayBadge,
  selectNode,
  setFactDraft,
  setOverlay,
  toggleAttacksOnly,
  toggleShowFacts,
  withGraph,
  type ViewState,
} from "./state.js";

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

function toast(text: string): void {
  const box = document.createElement("div");
  box.className = "toast";
  box.textContent = text;
  document.body.appendChild(box);
  setTimeout(() => box.remove(), 4000);
}

export async function boot(baseUrl = ""): Promise<void> {
  const api = new ApiClient(baseUrl);
  let state: ViewState = initialState();

  const canvas = el<HTMLDivElement>("canvas");
  const detail = el<HTMLDivElement>("node-detail");
  const hashLabel = el<HTMLSpanElement>("graph-hash");
  const noticeLabel = el<HTMLDivElement>("notice");
  const reportList = el<HTMLUListElement>("report");
  const badge = el<HTMLSpanElement>("overlay-badge");
  const factBox = el<HTMLTextAreaElement>("fact-text");

  function redraw(): void {
    renderGraph(canvas, state, (id) => {
      state = selectNode(state, id);
      redraw();
    });
    renderNodeDetail(detail, state);
    hashLabel.textContent = state.graphHash ? state.graphHash.slice(0, 12) : "-";
    noticeLabel.textContent = state.notice ?? "";
    badge.textContent = overlayBadge(state) ?? "";
    factBox.value = state.factDraft;
    reportList.textContent = "";
    for (const group of groupedReportEntries(state)) {
      const item = document.createElement("li");
      const facts = group.entries
        .map((e) => `${e.fact} (${e.confidence.toFixed(2)})`)
        .join(", ");
      item.textContent = `${group.literal} contradicted by ${facts}`;
      reportList.appendChild(item);
    }
  }

  async function loadGraph(): Promise<void> {
    const { graph, hash } = await api.graph();
    const layout = computeLayout(graph, hash);
    state = withGraph(state, graph, hash, layout.positions, layout.degraded);
    redraw();
  }

  /** Any response hash that contradicts the loaded graph forces a reload. */
  async function guardHash(responseHash: string): Promise<void> {
    if (isStale(state, responseHash)) {
      toast("graph changed on the server: reloading");
      await loadGraph();
    }
  }

  el<HTMLButtonElement>("inject").addEventListener("click", async () => {
    state = setFactDraft(state, factBox.value);
    if (!state.factDraft.trim()) {
      toast("enter a fact first");
      return;
    }
    try {
      const response = await api.injectFacts(state.factDraft);
      await loadGraph(); // injection changes the graph; next injection sees it
      state = applyFactReport(state, response);
      redraw();
    } catch (err) {
      if (err instanceof ServiceUnavailableError) {
        toast(`service unavailable: ${err.message}`); // draft stays in the box
      } else {
        toast(String(err));
      }
      redraw();
    }
  });

  el<HTMLButtonElement>("solve").addEventListener("click", async () => {
    const k = Number(el<HTMLInputElement>("solve-k").value) || 3;
    const semantics = el<HTMLSelectElement>("solve-semantics").value;
    try {
      const response = await api.solve(k, semantics);
      await guardHash(response.graph_hash);
      state = setOverlay(state, response);
      redraw();
    } catch (err) {
      toast(String(err));
    }
  });

  el<HTMLButtonElement>("overlay-prev").addEventListener("click", () => {
    state = cycleOverlay(state, -1);
    redraw();
  });
  el<HTMLButtonElement>("overlay-next").addEventListener("click", () => {
    state = cycleOverlay(state, 1);
    redraw();
  });

  el<HTMLButtonElement>("export-feedback").addEventListener("click", async () => {
    try {
      const response = await api.feedback(3, 5);
      await guardHash(response.graph_hash);
      // server-rendered file: the UI never re-renders feedback content
      const blob = new Blob([response.file_text], { type: "text/plain" });
      const link = document.createElement("a");
      link.href = URL.createObjectURL(blob);
      link.download = "feedback.txt";
      link.click();
      URL.revokeObjectURL(link.href);
    } catch (err) {
      toast(String(err));
    }
  });

  el<HTMLInputElement>("show-facts").addEventListener("change", () => {
    state = toggleShowFacts(state);
    redraw();
  });
  el<HTMLInputElement>("attacks-only").addEventListener("change", () => {
    state = toggleAttacksOnly(state);
    redraw();
  });
  factBox.addEventListener("input", () => {
    state = setFactDraft(state, factBox.value);
  });

  await loadGraph();
}
