/** Wire types mirroring the graph service contract. */

export type NodeKind = "assumption" | "fact";
export type Relation = "support" | "attack";

export interface GraphNode {
  id: string;
  text: string;
  section: number;
  kind: NodeKind;
}

export interface GraphEdge {
  src: string;
  dst: string;
  relation: Relation;
  confidence: number;
}

export interface GraphFile {
  version: number;
  nodes: GraphNode[];
  edges: GraphEdge[];
}

export interface FactCheckEntry {
  attacked: string;
  fact: string;
  confidence: number;
}

export interface Corroboration {
  supported: string;
  fact: string;
  confidence: number;
}

export interface FactsResponse {
  graph_hash: string;
  ingested_facts: number;
  discarded_edges_into_facts: number;
  entries: FactCheckEntry[];
  corroborations: Corroboration[];
}

export interface Extension {
  size: number;
  members: string[];
}

export interface SolveResponse {
  graph_hash: string;
  semantics: string;
  complete: boolean;
  extensions: Extension[];
}

export interface FeedbackResponse {
  graph_hash: string;
  message: string;
  file_text: string;
  attacked_literals: string[];
  key_literals: string[];
}

export interface HealthResponse {
  status: string;
  graph_hash: string;
}

export interface StatsResponse {
  graph_hash: string;
  node_count: number;
  fact_count: number;
  support_count: number;
  attack_count: number;
  ratio: string;
}
