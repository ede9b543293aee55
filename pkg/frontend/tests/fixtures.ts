// Canned API payloads matching the server's wire format byte for byte
// (values lifted from the backend's golden reports).

import type {
  AnalysisReportJson,
  ArchiveInfoJson,
  JobJson,
  MementoDatetimeJson,
  StoreDocumentJson,
} from "../src/api";

const MITRE_DT: MementoDatetimeJson = {
  raw: "Mon, 12 Apr 2010 12:50:57 GMT",
  iso: "2010-04-12T12:50:57Z",
  datestring: "20100412125057",
};

export const reportRootMemento: AnalysisReportJson = {
  id: "5bd455188d01e5de",
  url: "https://web.archive.org/web/20100412125057/http://www.mitre.org/",
  fetched_at: "2020-08-04T10:00:00Z",
  classification: {
    kind: "ROOT_MEMENTO",
    memento_info: true,
    memento_datetime: MITRE_DT,
    memento_dates: [],
    mixed_memento_live_web: false,
    deep_dates: [],
    unparsed_headers: [],
  },
  badge: "2010-04-12",
  popup: [
    "The page displayed is a memento captured on Mon, 12 Apr 2010 12:50:57 GMT",
  ],
  tree: {
    url: "https://web.archive.org/web/20100412125057/http://www.mitre.org/",
    final_url: "https://web.archive.org/web/20100412125057/http://www.mitre.org/",
    depth: 0,
    status: 200,
    memento_datetime: MITRE_DT,
    memento_header: "Mon, 12 Apr 2010 12:50:57 GMT",
    fetch_error: null,
    children: [],
  },
  resource_datetimes: null,
};

const MIXED_DATES: MementoDatetimeJson[] = [
  {
    raw: "Wed, 01 Jan 2020 12:00:00 GMT",
    iso: "2020-01-01T12:00:00Z",
    datestring: "20200101120000",
  },
  {
    raw: "Sat, 06 Jun 2020 06:06:06 GMT",
    iso: "2020-06-06T06:06:06Z",
    datestring: "20200606060606",
  },
  {
    raw: "Thu, 31 Dec 2020 23:59:59 GMT",
    iso: "2020-12-31T23:59:59Z",
    datestring: "20201231235959",
  },
];

export const reportMixed: AnalysisReportJson = {
  id: "9a5ffa7418942dc0",
  url: "https://example.com/compare.html",
  fetched_at: "2020-08-04T10:00:00Z",
  classification: {
    kind: "MIXED_LIVE_ARCHIVAL",
    memento_info: true,
    memento_datetime: null,
    memento_dates: MIXED_DATES,
    mixed_memento_live_web: false,
    deep_dates: [],
    unparsed_headers: [],
  },
  badge: "Mixed archival content",
  popup: [
    "This page displays a mix of live and archived content.",
    "Wed, 01 Jan 2020 12:00:00 GMT",
    "Sat, 06 Jun 2020 06:06:06 GMT",
    "Thu, 31 Dec 2020 23:59:59 GMT",
  ],
  tree: {
    url: "https://example.com/compare.html",
    final_url: "https://example.com/compare.html",
    depth: 0,
    status: 200,
    memento_datetime: null,
    memento_header: null,
    fetch_error: null,
    children: [],
  },
  resource_datetimes: null,
};

export const reportLive: AnalysisReportJson = {
  id: "10cf5201f0b0bc2e",
  url: "https://example.com/",
  fetched_at: "2020-08-04T10:00:00Z",
  classification: {
    kind: "LIVE",
    memento_info: false,
    memento_datetime: null,
    memento_dates: [],
    mixed_memento_live_web: false,
    deep_dates: [],
    unparsed_headers: [],
  },
  badge: null,
  popup: [],
  tree: {
    url: "https://example.com/",
    final_url: "https://example.com/",
    depth: 0,
    status: 200,
    memento_datetime: null,
    memento_header: null,
    fetch_error: null,
    children: [],
  },
  resource_datetimes: null,
};

export const reportWithResources: AnalysisReportJson = {
  ...reportRootMemento,
  id: "c0ffee0000000000",
  resource_datetimes: [
    {
      url: "https://web.archive.org/web/20100412125057im_/http://www.mitre.org/a.png",
      datetime: MITRE_DT,
    },
    {
      url: "https://web.archive.org/web/20100412125057cs_/http://www.mitre.org/site.css",
      datetime: MITRE_DT,
    },
    {
      url: "http://www.mitre.org/live.js",
      datetime: null,
    },
  ],
};

function archive(
  id: string,
  display_name: string,
  overrides: Partial<ArchiveInfoJson> = {},
): ArchiveInfoJson {
  return {
    id,
    display_name,
    host_patterns: [`${id}.example`],
    iframe_display: false,
    redirect_style: "NEAREST_DATETIME",
    redirect_base: null,
    submit_endpoint: null,
    ...overrides,
  };
}

// Catalogue excerpt in server order: submission-capable entries mixed in
// with recognition-only ones.
export const archiveCatalogue: ArchiveInfoJson[] = [
  archive("archive_it", "Archive-It"),
  archive("archive_today", "Archive.today", {
    redirect_base: "https://archive.ph",
    submit_endpoint: "https://archive.ph/submit/",
  }),
  archive("trove", "Trove", { iframe_display: true }),
  archive("internet_archive", "Internet Archive", {
    redirect_base: "https://web.archive.org/web",
    submit_endpoint: "https://web.archive.org/save",
  }),
  archive("permacc", "Perma.cc", { iframe_display: true }),
  archive("megalodon", "Megalodon", {
    redirect_style: "NONE",
    submit_endpoint: "https://megalodon.jp/pc/get_simple/decide",
  }),
];

const PERMANENT_ROOTS = [
  ["Bookmarks bar", "BOOKMARK_BAR"],
  ["No Archive", "NO_ARCHIVE"],
  ["Archive.today", "ARCHIVE_TODAY"],
  ["Internet Archive", "INTERNET_ARCHIVE"],
  ["Megalodon", "MEGALODON"],
  ["Other bookmarks", "OTHER_NODE"],
  ["Mobile bookmarks", "MOBILE"],
] as const;

export const CONSTRUCTED_URL =
  "https://archive.ph/20200304150030/https://example.com/";
export const MEMENTO_URL = "https://archive.ph/AbCd5";

function storeDoc(archiveNodeUrl: string | null): StoreDocumentJson {
  return {
    version: 12,
    next_id: 10,
    roots: PERMANENT_ROOTS.map(([title, type], index) => {
      const root = {
        id: index + 1,
        guid: `guid-${index + 1}`,
        type,
        title,
        url: null,
        created_at: "2020-03-04T15:00:00Z",
        children: [] as StoreDocumentJson["roots"],
      };
      if (type === "BOOKMARK_BAR" && archiveNodeUrl !== null) {
        root.children = [
          {
            id: 9,
            guid: "guid-9",
            type: "FOLDER",
            title: "https://example.com/",
            url: null,
            created_at: "2020-03-04T15:00:00Z",
            children: [
              {
                id: 8,
                guid: "guid-8",
                type: "URL",
                title: "Example",
                url: "https://example.com/",
                created_at: "2020-03-04T15:00:00Z",
              },
              {
                id: 10,
                guid: "guid-10",
                type: "URL",
                title: "Archive.today example.com 2020-03-04",
                url: archiveNodeUrl,
                created_at: "2020-03-04T15:00:00Z",
              },
            ],
          },
        ];
      }
      return root;
    }),
  };
}

export const storeEmpty = storeDoc(null);
export const storeBeforeCompletion = storeDoc(CONSTRUCTED_URL);
export const storeAfterCompletion = storeDoc(MEMENTO_URL);

export function job(status: JobJson["status"], result: string | null): JobJson {
  return {
    id: "job-1",
    archive_id: "archive_today",
    target_url: "https://example.com/",
    submitted_at: "2020-03-04T15:00:00Z",
    status,
    result_url: result,
    error: null,
    node_id: 10,
  };
}
