// Page wiring: run picker, candidate comparison table, trace replay panel.
// The page is stateless beyond the service: a reload rebuilds every view
// from the endpoints alone.

import { ApiError, ReviewApi } from "./api.js";
import { ReplayController } from "./replay.js";
import { renderFrame } from "./render.js";
import type { CandidateSet, ReplayDocument } from "./types.js";

function el<T extends HTMLElement>(id: string): T {
    const node = document.getElementById(id);
    if (!node) throw new Error(`missing element #${id}`);
    return node as T;
}

let api = new ReviewApi("http://127.0.0.1:8008");
let currentRun = "";
let controller: ReplayController | null = null;
let lastTickMs = 0;

function setStatus(text: string, isError = false): void {
    const box = el<HTMLDivElement>("status");
    box.textContent = text;
    box.className = isError ? "status error" : "status";
}

async function refreshRuns(): Promise<void> {
    const runs = await api.listRuns();
    const picker = el<HTMLSelectElement>("run-picker");
    picker.innerHTML = "";
    for (const run of runs) {
        const option = document.createElement("option");
        option.value = run;
        option.textContent = run;
        picker.appendChild(option);
    }
    if (runs.length > 0) {
        currentRun = runs[0];
        picker.value = currentRun;
        await Promise.all([refreshCandidates(), refreshTraces()]);
    } else {
        setStatus("no runs found under the service's runs root", true);
    }
}

function candidateCard(subtype: string, set: CandidateSet): HTMLElement {
    const card = document.createElement("div");
    card.className = "subtype-card";
    const title = document.createElement("h3");
    title.textContent = `${subtype} (iteration ${set.iteration})`;
    card.appendChild(title);
    for (const cand of set.candidates) {
        const row = document.createElement("div");
        row.className = "candidate" + (set.winner_id === cand.id ? " winner" : "");
        const head = document.createElement("div");
        const metric = cand.metrics["selection_metric"];
        head.textContent =
            `candidate ${cand.id} [${cand.status}]` +
            (metric !== undefined ? ` effective rate ${metric.toFixed(2)}%` : "") +
            (set.winner_id === cand.id ? " (winner)" : "");
        const source = document.createElement("pre");
        source.textContent = cand.source || "(no source)";
        const pick = document.createElement("button");
        pick.textContent = "select as winner";
        pick.disabled = cand.status !== "valid";
        pick.addEventListener("click", async () => {
            try {
                const ack = await api.submitSelection(currentRun, subtype, set.iteration, cand.id);
                setStatus(`selection confirmed: ${subtype} iteration ${ack.iteration} -> candidate ${ack.candidate_id}`);
                await refreshCandidates();
            } catch (err) {
                // Server-side validation text is shown verbatim.
                setStatus(err instanceof ApiError ? `selection rejected: ${err.message}` : String(err), true);
            }
        });
        row.append(head, source, pick);
        card.appendChild(row);
    }
    return card;
}

async function refreshCandidates(): Promise<void> {
    const body = await api.candidates(currentRun);
    const host = el<HTMLDivElement>("candidates");
    host.innerHTML = "";
    for (const [subtype, sets] of Object.entries(body.subtypes)) {
        for (const set of sets) {
            host.appendChild(candidateCard(subtype, set));
        }
    }
}

async function refreshTraces(): Promise<void> {
    const traces = await api.listTraces(currentRun);
    const list = el<HTMLSelectElement>("trace-picker");
    list.innerHTML = "";
    for (const id of traces) {
        const option = document.createElement("option");
        option.value = id;
        option.textContent = id;
        list.appendChild(option);
    }
    if (traces.length > 0) {
        await loadTrace(traces[0]);
    }
}

async function loadTrace(traceId: string): Promise<void> {
    const doc: ReplayDocument = await api.trace(currentRun, traceId);
    controller = new ReplayController(doc);
    const scrub = el<HTMLInputElement>("scrub");
    scrub.max = String(Math.max(doc.frames.length - 1, 0));
    scrub.value = "0";
    const label = doc.label
        ? `${doc.label.effective ? "effective" : "not attributable"} / ${doc.label.subtype}`
        : "no label";
    el<HTMLSpanElement>("trace-label").textContent =
        `${doc.frames.length} frames at ${doc.playback_rate} fps; ${label}`;
    paint();
}

function paint(): void {
    if (!controller) return;
    const canvas = el<HTMLCanvasElement>("replay-canvas");
    renderFrame(canvas, controller.doc, controller.currentFrame, controller.atCollision);
    el<HTMLInputElement>("scrub").value = String(controller.currentFrame);
    el<HTMLSpanElement>("frame-indicator").textContent = controller.empty
        ? "no frames"
        : `${controller.currentFrame + 1} / ${controller.frameCount}`;
}

function animate(nowMs: number): void {
    if (controller) {
        controller.tick(nowMs - lastTickMs);
        paint();
    }
    lastTickMs = nowMs;
    requestAnimationFrame(animate);
}

export function boot(): void {
    el<HTMLButtonElement>("connect").addEventListener("click", async () => {
        api = new ReviewApi(el<HTMLInputElement>("service-url").value.replace(/\/$/, ""));
        try {
            await refreshRuns();
            setStatus("connected");
        } catch (err) {
            setStatus(`cannot reach service: ${err}`, true);
        }
    });
    el<HTMLSelectElement>("run-picker").addEventListener("change", async (ev) => {
        currentRun = (ev.target as HTMLSelectElement).value;
        await Promise.all([refreshCandidates(), refreshTraces()]);
    });
    el<HTMLSelectElement>("trace-picker").addEventListener("change", (ev) =>
        loadTrace((ev.target as HTMLSelectElement).value),
    );
    el<HTMLButtonElement>("play-pause").addEventListener("click", () => controller?.toggle());
    el<HTMLInputElement>("scrub").addEventListener("input", (ev) => {
        controller?.pause();
        controller?.scrubTo(Number((ev.target as HTMLInputElement).value));
        paint();
    });
    requestAnimationFrame(animate);
}

if (typeof document !== "undefined" && document.getElementById("service-url")) {
    boot();
}
