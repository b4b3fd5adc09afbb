// Wire types of the review service (see docs/http_api.md in the repo root).

export interface VehiclePose {
    id: number;
    role: "tested" | "adversarial" | "background";
    x: number;
    y: number;
    heading: number;
    length: number;
    width: number;
}

export interface RoadGeometry {
    kind: "highway" | "roundabout";
    lane_count: number;
    lane_width: number;
    ring_radius: number;
    ramp_count: number;
    ramp_length: number;
}

export interface ReplayDocument {
    trace_id: string;
    geometry: RoadGeometry;
    frames: VehiclePose[][];
    collision_frame: number | null;
    playback_rate: number; // frames per second
    label: AccidentLabel | null;
}

export interface AccidentLabel {
    effective: boolean;
    subtype: string;
    culprit: number | null;
    evidence: [number, string][];
}

export interface Candidate {
    id: number;
    source: string;
    status: "valid" | "invalid";
    diagnostics: unknown[];
    metrics: Record<string, number>;
}

export interface CandidateSet {
    iteration: number;
    accident_type: string;
    candidates: Candidate[];
    winner_id: number | null;
    no_signal: boolean;
}

export interface CandidatesResponse {
    run: string;
    subtypes: Record<string, CandidateSet[]>;
}

export interface SelectionAck {
    ok: boolean;
    subtype: string;
    iteration: number;
    candidate_id: number;
}
