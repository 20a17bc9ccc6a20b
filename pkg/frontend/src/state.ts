/** View state and its pure transitions.
 *
 * The state never re-derives verification verdicts: everything displayed
 * (fact-check entries, extensions, feedback) arrives from the service, and
 * a graph-hash mismatch on any response forces a reload.
 */

import type { Extension, FactsResponse, GraphFile, SolveResponse } from "./types.js";
import type { Point } from "./layout.js";

export interface OverlayState {
  semantics: string;
  extensions: Extension[];
  index: number;
  disabledReason: string | null;
}

export interface ViewState {
  graph: GraphFile | null;
  graphHash: string | null;
  positions: Record<string, Point>;
  degradedLayout: boolean;
  selected: string | null;
  overlay: OverlayState | null;
  factDraft: string;
  highlighted: string[];
  reportEntries: FactsResponse["entries"];
  showFacts: boolean;
  attacksOnly: boolean;
  notice: string | null;
}

export function initialState(): ViewState {
  return {
    graph: null,
    graphHash: null,
    positions: {},
    degradedLayout: false,
    selected: null,
    overlay: null,
    factDraft: "",
    highlighted: [],
    reportEntries: [],
    showFacts: true,
    attacksOnly: false,
    notice: null,
  };
}

export function withGraph(
  state: ViewState,
  graph: GraphFile,
  hash: string,
  positions: Record<string, Point>,
  degraded: boolean,
): ViewState {
  return {
    ...state,
    graph,
    graphHash: hash,
    positions,
    degradedLayout: degraded,
    selected: null,
    overlay: null,
    highlighted: [],
    notice: degraded
      ? `large graph (${graph.nodes.length} nodes): static layout, physics disabled`
      : null,
  };
}

/** True when a response's hash contradicts the loaded graph: reload required. */
export function isStale(state: ViewState, responseHash: string): boolean {
  return state.graphHash !== null && responseHash !== "" && responseHash !== state.graphHash;
}

export function setFactDraft(state: ViewState, draft: string): ViewState {
  return { ...state, factDraft: draft };
}

/** Successful injection: highlight exactly the attacked literals, clear the
 * draft. (On failure the caller leaves the state untouched, preserving the
 * draft.) */
export function applyFactReport(state: ViewState, response: FactsResponse): ViewState {
  const highlighted = [...new Set(response.entries.map((e) => e.attacked))].sort();
  return {
    ...state,
    factDraft: "",
    highlighted,
    reportEntries: response.entries,
  };
}

export function setOverlay(state: ViewState, response: SolveResponse): ViewState {
  if (!response.complete) {
    return {
      ...state,
      overlay: {
        semantics: response.semantics,
        extensions: [],
        index: 0,
        disabledReason: "solver timeout: overlay disabled",
      },
    };
  }
  return {
    ...state,
    overlay: {
      semantics: response.semantics,
      extensions: response.extensions,
      index: 0,
      disabledReason: null,
    },
  };
}

export function clearOverlay(state: ViewState): ViewState {
  return { ...state, overlay: null };
}

export function cycleOverlay(state: ViewState, step: number): ViewState {
  const overlay = state.overlay;
  if (!overlay || overlay.extensions.length === 0) {
    return state;
  }
  const count = overlay.extensions.length;
  const index = (overlay.index + step + count) % count;
  return { ...state, overlay: { ...overlay, index } };
}

export function activeExtension(state: ViewState): Extension | null {
  const overlay = state.overlay;
  if (!overlay || overlay.disabledReason || overlay.extensions.length === 0) {
    return null;
  }
  return overlay.extensions[overlay.index];
}

export function overlayMembers(state: ViewState): Set<string> {
  const extension = activeExtension(state);
  return new Set(extension ? extension.members : []);
}

/** Badge text for the active extension; the empty extension gets its own chip. */
export function overlayBadge(state: ViewState): string | null {
  const overlay = state.overlay;
  if (!overlay) return null;
  if (overlay.disabledReason) return overlay.disabledReason;
  if (overlay.extensions.length === 0) return `no ${overlay.semantics} extension`;
  const extension = overlay.extensions[overlay.index];
  const label = extension.size === 0 ? "empty extension" : `size ${extension.size}`;
  return `${overlay.semantics} ${overlay.index + 1}/${overlay.extensions.length}: ${label}`;
}

export function toggleShowFacts(state: ViewState): ViewState {
  return { ...state, showFacts: !state.showFacts };
}

export function toggleAttacksOnly(state: ViewState): ViewState {
  return { ...state, attacksOnly: !state.attacksOnly };
}

export function selectNode(state: ViewState, id: string | null): ViewState {
  return { ...state, selected: id };
}

/** Report entries grouped per contradicted literal (stable id order). */
export function groupedReportEntries(
  state: ViewState,
): Array<{ literal: string; entries: FactsResponse["entries"] }> {
  const byLiteral = new Map<string, FactsResponse["entries"]>();
  for (const entry of state.reportEntries) {
    const bucket = byLiteral.get(entry.attacked) ?? [];
    bucket.push(entry);
    byLiteral.set(entry.attacked, bucket);
  }
  return [...byLiteral.keys()].sort().map((literal) => ({
    literal,
    entries: byLiteral.get(literal)!,
  }));
}

export function visibleNodes(state: ViewState): GraphFile["nodes"] {
  if (!state.graph) return [];
  return state.graph.nodes.filter((n) => state.showFacts || n.kind !== "fact");
}

export function visibleEdges(state: ViewState): GraphFile["edges"] {
  if (!state.graph) return [];
  const nodeVisible = new Set(visibleNodes(state).map((n) => n.id));
  return state.graph.edges.filter(
    (e) =>
      nodeVisible.has(e.src) &&
      nodeVisible.has(e.dst) &&
      (!state.attacksOnly || e.relation === "attack"),
  );
}
