/**
 * Typed access to the decision service. Plain fetch plus JSON, nothing else.
 * The base URL is configurable so the panel can be served from the engine
 * itself (same origin, empty base) or from any static host pointing at it.
 */

import type {
  ApiErrorBody,
  DecisionDocument,
  ScenarioDocument,
  StoredScenario,
  StoredScenarioSummary,
  SweepDocument,
} from "./types.js";

/** A non-2xx response, carrying the server's structured error body. */
export class ApiRequestError extends Error {
  readonly status: number;
  readonly code: string;
  readonly field?: string;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.name = "ApiRequestError";
    this.status = status;
    this.code = body.code;
    this.field = body.field;
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class PlannerClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
    headers?: Record<string, string>,
  ): Promise<T> {
    const init: RequestInit = { method, headers };
    if (body !== undefined) {
      init.body = JSON.stringify(body);
      init.headers = { "content-type": "application/json", ...headers };
    }
    const res = await this.fetchFn(this.baseUrl + path, init);
    if (res.status === 204) {
      return undefined as T;
    }
    if (!res.ok) {
      let parsed: ApiErrorBody;
      try {
        parsed = (await res.json()) as ApiErrorBody;
      } catch {
        parsed = { code: "http_error", message: `${res.status} ${res.statusText}` };
      }
      throw new ApiRequestError(res.status, parsed);
    }
    return (await res.json()) as T;
  }

  evaluate(scenario: ScenarioDocument): Promise<DecisionDocument> {
    return this.request("POST", "/api/v1/evaluate", scenario);
  }

  sweep(
    scenario: ScenarioDocument,
    axis: string,
    values: readonly number[],
  ): Promise<SweepDocument> {
    return this.request("POST", "/api/v1/sweep", { scenario, axis, values });
  }

  async listScenarios(): Promise<StoredScenarioSummary[]> {
    const doc = await this.request<{ scenarios: StoredScenarioSummary[] }>(
      "GET",
      "/api/v1/scenarios",
    );
    return doc.scenarios;
  }

  getScenario(name: string): Promise<StoredScenario> {
    return this.request("GET", `/api/v1/scenarios/${encodeURIComponent(name)}`);
  }

  createScenario(scenario: ScenarioDocument): Promise<StoredScenarioSummary> {
    return this.request("POST", "/api/v1/scenarios", scenario);
  }

  replaceScenario(
    name: string,
    scenario: ScenarioDocument,
    expectedRevision?: number,
  ): Promise<StoredScenarioSummary> {
    const headers =
      expectedRevision === undefined ? undefined : { "if-match": String(expectedRevision) };
    return this.request(
      "PUT",
      `/api/v1/scenarios/${encodeURIComponent(name)}`,
      scenario,
      headers,
    );
  }

  deleteScenario(name: string): Promise<void> {
    return this.request("DELETE", `/api/v1/scenarios/${encodeURIComponent(name)}`);
  }
}
