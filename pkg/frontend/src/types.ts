/** Payload shapes of the /api/v1 endpoints this client consumes. */

export type LayerName = "common" | "specific_a" | "specific_b";

export const LAYER_NAMES: readonly LayerName[] = [
  "common",
  "specific_a",
  "specific_b",
];

export interface MemberSummary {
  id: string;
  collective: string | null;
  role: string;
  documents: number;
  occurrences: number;
  associations: number;
  shared_associations: number;
}

export interface MembersResponse {
  members: MemberSummary[];
  collectives: string[];
}

export interface ConceptRow {
  concept: string;
  label: string;
  unique_degree: number;
  weighted_degree: number;
}

export interface NetworkEdge {
  a: string;
  b: string;
  count: number;
}

export interface NetworkResponse {
  member: string;
  concepts: number;
  occurrences: number;
  associations: number;
  top_concepts: ConceptRow[];
  top_associations: NetworkEdge[];
  edges?: NetworkEdge[];
}

export interface GroupParams {
  label: string;
  members: string[];
  min_members: number;
}

export interface LayerSummary {
  edges: number;
  total_count: number;
  concepts: number;
}

export interface LayerEdge {
  a: string;
  b: string;
  label_a: string;
  label_b: string;
  sharers: string[];
  total_count: number;
  layer: LayerName;
}

export interface LayersResponse {
  params: {
    a: GroupParams;
    b: GroupParams;
    min_total: number;
    specific_min: number | null;
  };
  layers: Record<LayerName, LayerSummary>;
  edges?: LayerEdge[];
}

export interface TableAssociation {
  a: string;
  b: string;
  label_a: string;
  label_b: string;
  total_count: number;
}

export interface TablesResponse {
  layer: string;
  k: number;
  concepts: ConceptRow[];
  associations: TableAssociation[];
}

export interface QuoteHit {
  doc_id: string;
  member_id: string;
  genre: string;
  sentence_index: number;
  span: [number, number];
  context: string;
  context_span: [number, number];
  matched: string | string[];
}

export interface QuotesResponse {
  matched: { concept: string } | { a: string; b: string };
  total: number;
  offset: number;
  limit: number;
  hits: QuoteHit[];
}

export interface CommunityTie {
  u: string;
  v: string;
  weight: number;
}

export interface CommunitiesResponse {
  assignment: Record<string, number>;
  trace: [number, number][];
  edges: CommunityTie[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
}
