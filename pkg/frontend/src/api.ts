import {
  CandidatesResponse,
  EnhanceCandidatesResponse,
  EnhancementKind,
  EntityResponse,
  LinkJson,
  LinkTypeJson,
  SearchResponse,
  TripleJson,
  ValuePayload,
} from './types';

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    detail: string,
  ) {
    super(detail);
  }
}

/** Thin typed client over the JSON API; every screen goes through this. */
export class ApiClient {
  constructor(private baseUrl: string) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { 'Content-Type': 'application/json' },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      let code = 'HttpError';
      let detail = `${response.status}`;
      try {
        const payload = (await response.json()) as { error?: string; detail?: string };
        code = payload.error ?? code;
        detail = payload.detail ?? detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, code, detail);
    }
    return (await response.json()) as T;
  }

  search(query: string, limit = 20): Promise<SearchResponse> {
    return this.request('GET', `/api/search?q=${encodeURIComponent(query)}&limit=${limit}`);
  }

  autocomplete(prefix: string, limit = 8): Promise<string[]> {
    return this.request(
      'GET',
      `/api/autocomplete?prefix=${encodeURIComponent(prefix)}&limit=${limit}`,
    );
  }

  entity(iri: string): Promise<EntityResponse> {
    return this.request('GET', `/api/entity/${encodeURIComponent(iri)}`);
  }

  candidates(iri: string, algorithm: string, k = 10): Promise<CandidatesResponse> {
    return this.request(
      'GET',
      `/api/link/candidates/${encodeURIComponent(iri)}?algorithm=${algorithm}&k=${k}`,
    );
  }

  acceptLink(local: string, target: string, linkType: string): Promise<LinkJson> {
    return this.request('POST', '/api/link', { local, target, linkType });
  }

  enhanceCandidates(iri: string, k?: number): Promise<EnhanceCandidatesResponse> {
    const suffix = k === undefined ? '' : `?k=${k}`;
    return this.request('GET', `/api/enhance/candidates/${encodeURIComponent(iri)}${suffix}`);
  }

  enhance(
    kind: EnhancementKind,
    subject: string,
    predicate: string,
    value: ValuePayload,
    sourceEntity?: string,
  ): Promise<{ applied: TripleJson | null }> {
    return this.request('POST', '/api/enhance', { kind, subject, predicate, value, sourceEntity });
  }

  deleteTriple(subject: string, predicate: string, object: ValuePayload): Promise<{ status: string }> {
    return this.request('DELETE', '/api/triple', { subject, predicate, object });
  }

  linkTypes(): Promise<LinkTypeJson[]> {
    return this.request('GET', '/api/linktypes');
  }
}
