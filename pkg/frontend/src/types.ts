// Wire format of the lodlink HTTP JSON API.

export interface IriRef {
  iri: string;
  compact: string | null;
}

export type TermJson =
  | ({ type: 'iri' } & IriRef)
  | { type: 'literal'; value: string; language: string | null; datatype: string | null };

export interface TripleJson {
  subject: IriRef;
  predicate: IriRef;
  object: TermJson;
  origin: 'local' | 'target' | 'enhanced';
  enhanced_from: string | null;
}

export interface ClusterJson {
  representative: IriRef;
  members: IriRef[];
  display_label: string;
  types: IriRef[];
}

export interface FacetJson extends IriRef {
  count: number;
}

export interface SearchResponse {
  clusters: ClusterJson[];
  facets: FacetJson[];
}

export interface LinkJson {
  source: IriRef;
  link_type: string;
  target: IriRef;
  created_by: string;
  timestamp: number;
}

export interface EntityResponse extends IriRef {
  types: IriRef[];
  assertions: TripleJson[];
  links: LinkJson[];
}

export interface ContextPairJson {
  predicate: IriRef;
  value: TermJson;
}

export interface CandidateJson {
  target: IriRef;
  score: number;
  rank: number;
  display_label: string;
  context: ContextPairJson[];
  types: IriRef[];
}

export interface CandidatesResponse {
  entity: IriRef;
  algorithm: string;
  k: number;
  candidates: CandidateJson[];
}

export interface EnhanceGroupJson {
  predicate: IriRef;
  values: TermJson[];
}

export interface EnhanceCandidatesResponse {
  entity: IriRef;
  groups: EnhanceGroupJson[];
}

export interface LinkTypeJson {
  vocabulary: string;
  relation: string;
  applies_to: string[];
  iri: string;
}

export interface ValuePayload {
  type: 'iri' | 'literal';
  value: string;
  language?: string | null;
  datatype?: string | null;
}

export type EnhancementKind = 'add_value' | 'add_to_new_property' | 'add_type' | 'delete';

export const ALGORITHMS = ['endpoint-a', 'endpoint-l', 'endpoint-al', 'wikistat'] as const;
export type Algorithm = (typeof ALGORITHMS)[number];

export function termToPayload(term: TermJson): ValuePayload {
  if (term.type === 'iri') {
    return { type: 'iri', value: term.iri };
  }
  return { type: 'literal', value: term.value, language: term.language, datatype: term.datatype };
}

export function termText(term: TermJson): string {
  if (term.type === 'iri') {
    return term.compact ?? term.iri;
  }
  return term.language ? `"${term.value}"@${term.language}` : `"${term.value}"`;
}
