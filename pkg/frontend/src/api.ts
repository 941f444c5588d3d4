/** Typed client for the faderwave HTTP inference service. */

export interface ModelInfo {
  kinds: string[];
  num_bins: number;
  m_per_second: number;
  sample_rate: number;
}

export interface SessionView {
  session_id: string;
  num_frames: number;
  attribute_tracks: Record<string, number[]>;
}

export interface SynthesizeRequest {
  session_id: string;
  edits: Record<string, number | number[]>;
  deterministic?: boolean;
}

export interface SynthesizeResult {
  sample_rate: number;
  audio_wav_base64: string;
  target_tracks: Record<string, number[]>;
  measured_tracks: Record<string, number[]>;
  measured_tracks_normalized: Record<string, number[]>;
}

export class ServiceError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ServiceError";
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (...a) => fetch(...a),
  ) {}

  private async parse<T>(resp: Response): Promise<T> {
    if (!resp.ok) {
      let detail = resp.statusText;
      try {
        const doc = await resp.json();
        if (doc && typeof doc.detail === "string") detail = doc.detail;
      } catch {
        /* non-JSON error body */
      }
      throw new ServiceError(resp.status, detail);
    }
    return (await resp.json()) as T;
  }

  async modelInfo(): Promise<ModelInfo> {
    const resp = await this.fetchFn(`${this.baseUrl}/model/info`);
    return this.parse<ModelInfo>(resp);
  }

  async openSession(wavBytes: ArrayBuffer | Uint8Array): Promise<SessionView> {
    const raw = wavBytes instanceof Uint8Array ? wavBytes : new Uint8Array(wavBytes);
    // copy into a plain ArrayBuffer so the body type is unambiguous
    const copy = new Uint8Array(raw.length);
    copy.set(raw);
    const body = copy.buffer as ArrayBuffer;
    const resp = await this.fetchFn(`${this.baseUrl}/session`, {
      method: "POST",
      headers: { "Content-Type": "application/octet-stream" },
      body,
    });
    return this.parse<SessionView>(resp);
  }

  async synthesize(req: SynthesizeRequest): Promise<SynthesizeResult> {
    const resp = await this.fetchFn(`${this.baseUrl}/synthesize`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ deterministic: true, ...req }),
    });
    return this.parse<SynthesizeResult>(resp);
  }
}
