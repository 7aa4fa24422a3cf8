/** Payload shapes of the /api/v1 endpoints this panel consumes. */

export interface PlaceStats {
  place: string;
  review_count: number;
  female_count: number;
  male_count: number;
  unknown_count: number;
  sentence_count: number;
}

export interface PlaceInfo {
  place: string;
  stats: PlaceStats;
}

export interface AspectInfo {
  label: string;
  terms: string[];
}

export type AspectSelection = string[] | "all";

export interface SummarizeRequest {
  place: string;
  aspects: AspectSelection;
  length_words: number;
  female_ratio: number;
}

export interface ScoreBreakdown {
  readability_raw: number;
  readability: number;
  polarity: number;
  sentiment_strength_raw: number;
  sentiment_strength: number;
  relevance_raw: number;
  relevance: number;
  combined: number;
}

export interface SummaryEntry {
  sentence_id: string;
  review_id: string;
  text: string;
  gender: "F" | "M" | "U";
  aspect: string;
  word_count: number;
  scores: ScoreBreakdown;
}

export interface ControlsEcho {
  place: string;
  aspects: AspectSelection;
  length_words: number;
  female_ratio: number;
  [extra: string]: unknown;
}

export interface SummaryResponse {
  place: string;
  entries: SummaryEntry[];
  total_words: number;
  female_count: number;
  male_count: number;
  objective: number;
  score_sum: number;
  penalty_sum: number;
  fairness_term: number;
  solver_optimal: boolean;
  diagnostic: string | null;
  controls_echo: ControlsEcho;
}

export interface ApiErrorPayload {
  error: string;
  fields?: Record<string, string>;
  request_id?: string;
}
