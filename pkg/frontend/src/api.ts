// Typed client for the mementoscope REST API. Field names mirror the wire
// format exactly; every displayed string passes through untouched.

export interface MementoDatetimeJson {
  raw: string;
  iso: string;
  datestring: string;
}

export interface FrameNodeJson {
  url: string;
  final_url: string | null;
  depth: number;
  status: number;
  memento_datetime: MementoDatetimeJson | null;
  memento_header: string | null;
  fetch_error: string | null;
  children: FrameNodeJson[];
}

export interface ClassificationJson {
  kind: string;
  memento_info: boolean;
  memento_datetime: MementoDatetimeJson | null;
  memento_dates: MementoDatetimeJson[];
  mixed_memento_live_web: boolean;
  deep_dates: { url: string; datetime: MementoDatetimeJson | null }[];
  unparsed_headers: { url: string; header: string }[];
}

export interface ResourceDatetimeJson {
  url: string;
  datetime: MementoDatetimeJson | null;
}

export interface AnalysisReportJson {
  id: string;
  url: string;
  fetched_at: string;
  classification: ClassificationJson;
  badge: string | null;
  popup: string[];
  tree: FrameNodeJson;
  resource_datetimes: ResourceDatetimeJson[] | null;
}

export interface BookmarkNodeJson {
  id: number;
  guid: string;
  type: string;
  title: string;
  url: string | null;
  created_at: string;
  children?: BookmarkNodeJson[];
}

export interface StoreDocumentJson {
  version: number;
  next_id: number;
  roots: BookmarkNodeJson[];
}

export interface NodeBriefJson {
  id: number;
  type: string;
  title: string;
  url: string | null;
}

export interface BookmarkResponseJson {
  bookmark: NodeBriefJson;
  created_bookmark: boolean;
  folder: NodeBriefJson | null;
  archive_node: NodeBriefJson | null;
  job_id: string | null;
}

export interface JobJson {
  id: string;
  archive_id: string;
  target_url: string;
  submitted_at: string;
  status: "PENDING" | "RUNNING" | "DONE" | "FAILED";
  result_url: string | null;
  error: string | null;
  node_id: number | null;
}

export interface ArchiveInfoJson {
  id: string;
  display_name: string;
  host_patterns: string[];
  iframe_display: boolean;
  redirect_style: string;
  redirect_base: string | null;
  submit_endpoint: string | null;
}

export interface AnalyzeBody {
  url: string;
  max_depth?: number;
  resources?: boolean;
}

export interface BookmarkBody {
  url: string;
  title?: string;
  archive: string;
  offset_seconds?: number;
}

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(path, init);
  const body = await response.json();
  if (!response.ok) {
    const detail = (body as { error?: { code: string; message: string } }).error;
    throw new ApiError(
      detail?.code ?? "UNKNOWN",
      detail?.message ?? `request failed with status ${response.status}`,
      response.status,
    );
  }
  return body as T;
}

function post<T>(path: string, body: unknown): Promise<T> {
  return request<T>(path, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
}

export const api = {
  analyze(body: AnalyzeBody): Promise<AnalysisReportJson> {
    return post("/api/analyze", body);
  },
  analyses(): Promise<{ analyses: AnalysisReportJson[] }> {
    return request("/api/analyses");
  },
  bookmarks(): Promise<StoreDocumentJson> {
    return request("/api/bookmarks");
  },
  addBookmark(body: BookmarkBody): Promise<BookmarkResponseJson> {
    return post("/api/bookmarks", body);
  },
  job(id: string): Promise<JobJson> {
    return request(`/api/jobs/${id}`);
  },
  archives(): Promise<{ archives: ArchiveInfoJson[] }> {
    return request("/api/config/archives");
  },
};
