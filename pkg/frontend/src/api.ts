/** Client for the argonaut graph service.
 *
 * All verification logic stays server-side; this client only fetches. Every
 * response's graph hash is surfaced so the view can detect a stale graph.
 */

import type {
  FactsResponse,
  FeedbackResponse,
  GraphFile,
  HealthResponse,
  SolveResponse,
  StatsResponse,
} from "./types.js";

export class ServiceUnavailableError extends Error {
  constructor(detail: string) {
    super(detail);
    this.name = "ServiceUnavailableError";
  }
}

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(`${status}: ${detail}`);
    this.name = "ApiError";
  }
}

export interface GraphFetch {
  graph: GraphFile;
  hash: string;
  raw: string;
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private baseUrl: string = "",
    private fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    let response: Response;
    try {
      response = await this.fetchFn(this.baseUrl + path, init);
    } catch (err) {
      throw new ServiceUnavailableError(`cannot reach service: ${String(err)}`);
    }
    if (response.status === 503) {
      const detail = await response.text();
      throw new ServiceUnavailableError(detail || "service unavailable");
    }
    if (!response.ok) {
      const detail = await response.text();
      throw new ApiError(response.status, detail);
    }
    return response;
  }

  private async postJson<T>(path: string, body: unknown): Promise<T> {
    const response = await this.request(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    return (await response.json()) as T;
  }

  async health(): Promise<HealthResponse> {
    const response = await this.request("/health");
    return (await response.json()) as HealthResponse;
  }

  async stats(): Promise<StatsResponse> {
    const response = await this.request("/stats");
    return (await response.json()) as StatsResponse;
  }

  /** The canonical graph file plus its hash (header-authoritative). */
  async graph(): Promise<GraphFetch> {
    const response = await this.request("/graph");
    const raw = await response.text();
    const graph = JSON.parse(raw) as GraphFile;
    const hash = response.headers.get("X-Graph-Hash") ?? "";
    return { graph, hash, raw };
  }

  async injectFacts(text: string): Promise<FactsResponse> {
    return this.postJson<FactsResponse>("/facts", { text });
  }

  async solve(k: number, semantics: string): Promise<SolveResponse> {
    return this.postJson<SolveResponse>("/solve", { k, semantics });
  }

  async feedback(m: number, topJ: number, truncation = 4): Promise<FeedbackResponse> {
    return this.postJson<FeedbackResponse>("/feedback", {
      m,
      top_j: topJ,
      truncation,
    });
  }
}
