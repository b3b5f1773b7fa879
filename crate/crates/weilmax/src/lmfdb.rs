//! Optional cross-check client against the LMFDB database of isogeny
//! classes of abelian varieties over finite fields.
//!
//! The client validates labels locally before touching the network, keeps a
//! one-file-per-label JSON cache, rate limits to at most one request per
//! second, and retries transient failures with exponential backoff. All
//! network traffic goes through the [`Transport`] trait so tests can run
//! against canned payloads.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::thread;
use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::weil::{self, WeilCandidate};

#[derive(Debug, Error)]
pub enum LmfdbError {
    #[error("malformed label {label}: {reason}")]
    BadLabel { label: String, reason: String },
    #[error("network failure fetching {label} after {attempts} attempts: {message}")]
    Network {
        label: String,
        attempts: u32,
        message: String,
    },
    #[error("label {0} is not in the remote database")]
    UnknownLabel(String),
    #[error("unexpected remote schema for {label}: {reason}; raw payload: {payload}")]
    SchemaDrift {
        label: String,
        reason: String,
        payload: String,
    },
    #[error("cache i/o under {dir}: {source}")]
    Cache {
        dir: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("network disabled and no cached record for {0}")]
    Offline(String),
}

/// One isogeny-class record as served by the remote database.
///
/// Big integers are serialized as decimal strings so the cache files are
/// exact at any size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemoteClassRecord {
    pub label: String,
    pub g: usize,
    pub q: String,
    /// a_1..a_g, the low-degree half of the Weil polynomial coefficients.
    pub coefficients: Vec<String>,
    pub point_count: String,
    /// Unix timestamp of the fetch that produced this record.
    pub fetched_at: u64,
    /// True when the record was served from the local cache.
    #[serde(skip)]
    pub from_cache: bool,
}

/// Minimal HTTP surface used by the client.
pub trait Transport: Send {
    /// Performs one GET. `Err` means a transport-level failure worth
    /// retrying; HTTP error statuses come back as `Ok` with the status set.
    fn get(&self, url: &str) -> Result<TransportResponse, String>;
}

#[derive(Clone, Debug)]
pub struct TransportResponse {
    pub status: u16,
    pub body: String,
}

/// Production transport backed by ureq.
pub struct HttpTransport {
    timeout: Duration,
}

impl HttpTransport {
    pub fn new(timeout: Duration) -> Self {
        HttpTransport { timeout }
    }
}

impl Default for HttpTransport {
    fn default() -> Self {
        HttpTransport::new(Duration::from_secs(30))
    }
}

impl Transport for HttpTransport {
    fn get(&self, url: &str) -> Result<TransportResponse, String> {
        match ureq::get(url).timeout(self.timeout).call() {
            Ok(resp) => {
                let status = resp.status();
                let body = resp.into_string().map_err(|e| e.to_string())?;
                Ok(TransportResponse { status, body })
            }
            Err(ureq::Error::Status(status, resp)) => {
                let body = resp.into_string().unwrap_or_default();
                Ok(TransportResponse { status, body })
            }
            Err(e) => Err(e.to_string()),
        }
    }
}

/// Field-by-field outcome of comparing a local candidate with the remote
/// record carrying the same label.
#[derive(Clone, Debug, Serialize)]
pub struct FieldComparison {
    pub field: String,
    pub local: String,
    pub remote: String,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub label: String,
    pub from_cache: bool,
    pub fields: Vec<FieldComparison>,
    pub full_match: bool,
}

struct RateState {
    last_request: Option<Instant>,
}

/// Synchronized client: at most one in-flight request, shared rate limit.
pub struct Client {
    base_url: String,
    cache_dir: PathBuf,
    network_enabled: bool,
    transport: Box<dyn Transport>,
    min_interval: Duration,
    backoff_base: Duration,
    max_attempts: u32,
    state: Mutex<RateState>,
}

impl Client {
    /// `base_url` and `cache_dir` fall back to the `LMFDB_BASE_URL` and
    /// `LMFDB_CACHE_DIR` environment variables when those are set.
    pub fn new(
        base_url: &str,
        cache_dir: &Path,
        network_enabled: bool,
        transport: Box<dyn Transport>,
    ) -> Self {
        let base_url = std::env::var("LMFDB_BASE_URL").unwrap_or_else(|_| base_url.to_string());
        let cache_dir = std::env::var("LMFDB_CACHE_DIR")
            .map(PathBuf::from)
            .unwrap_or_else(|_| cache_dir.to_path_buf());
        Client {
            base_url: base_url.trim_end_matches('/').to_string(),
            cache_dir,
            network_enabled,
            transport,
            min_interval: Duration::from_secs(1),
            backoff_base: Duration::from_millis(500),
            max_attempts: 3,
            state: Mutex::new(RateState { last_request: None }),
        }
    }

    /// Overrides the rate-limit and backoff timings; intended for tests.
    pub fn with_timing(mut self, min_interval: Duration, backoff_base: Duration) -> Self {
        self.min_interval = min_interval;
        self.backoff_base = backoff_base;
        self
    }

    fn cache_path(&self, label: &str) -> PathBuf {
        self.cache_dir.join(format!("{label}.json"))
    }

    fn cache_error(&self, source: std::io::Error) -> LmfdbError {
        LmfdbError::Cache {
            dir: self.cache_dir.clone(),
            source,
        }
    }

    /// Fetches one record by label, serving from the cache when possible.
    pub fn fetch_class(&self, label: &str) -> Result<RemoteClassRecord, LmfdbError> {
        weil::parse_label(label).map_err(|e| LmfdbError::BadLabel {
            label: label.to_string(),
            reason: e
                .to_string()
                .trim_start_matches("malformed label: ")
                .to_string(),
        })?;
        let path = self.cache_path(label);
        if path.exists() {
            let text = fs::read_to_string(&path).map_err(|e| self.cache_error(e))?;
            let mut record: RemoteClassRecord =
                serde_json::from_str(&text).map_err(|e| LmfdbError::SchemaDrift {
                    label: label.to_string(),
                    reason: format!("cached record is unreadable: {e}"),
                    payload: text.clone(),
                })?;
            record.from_cache = true;
            return Ok(record);
        }
        if !self.network_enabled {
            return Err(LmfdbError::Offline(label.to_string()));
        }
        let body = self.request(label)?;
        let record = parse_payload(label, &body)?;
        fs::create_dir_all(&self.cache_dir).map_err(|e| self.cache_error(e))?;
        let text = serde_json::to_string_pretty(&record).expect("record serializes");
        fs::write(&path, text).map_err(|e| self.cache_error(e))?;
        Ok(record)
    }

    fn request(&self, label: &str) -> Result<String, LmfdbError> {
        let url = format!(
            "{}/api/av_fqisog/?label={}&_format=json",
            self.base_url, label
        );
        let mut state = self.state.lock().expect("client state lock");
        let mut last_error = String::new();
        for attempt in 0..self.max_attempts {
            if let Some(last) = state.last_request {
                let elapsed = last.elapsed();
                if elapsed < self.min_interval {
                    thread::sleep(self.min_interval - elapsed);
                }
            }
            state.last_request = Some(Instant::now());
            match self.transport.get(&url) {
                Ok(resp) if resp.status == 200 => return Ok(resp.body),
                Ok(resp) if resp.status == 404 => {
                    return Err(LmfdbError::UnknownLabel(label.to_string()))
                }
                Ok(resp) => {
                    last_error = format!("http status {}", resp.status);
                }
                Err(e) => last_error = e,
            }
            thread::sleep(self.backoff_base * 2u32.pow(attempt));
        }
        Err(LmfdbError::Network {
            label: label.to_string(),
            attempts: self.max_attempts,
            message: last_error,
        })
    }

    /// Derives the candidate's label locally, fetches the remote record,
    /// and compares the two field by field.
    pub fn crosscheck(&self, cand: &WeilCandidate) -> Result<CrosscheckReport, LmfdbError> {
        let label = weil::lmfdb_label(&cand.full, &cand.q, cand.g);
        let record = self.fetch_class(&label)?;
        let mut fields = vec![
            FieldComparison {
                field: "g".into(),
                local: cand.g.to_string(),
                remote: record.g.to_string(),
                matches: cand.g == record.g,
            },
            FieldComparison {
                field: "q".into(),
                local: cand.q.q.to_string(),
                remote: record.q.clone(),
                matches: cand.q.q.to_string() == record.q,
            },
        ];
        for (i, remote) in record.coefficients.iter().enumerate() {
            let local = cand.full.coeff(2 * cand.g - (i + 1)).to_string();
            fields.push(FieldComparison {
                field: format!("a{}", i + 1),
                local: local.clone(),
                remote: remote.clone(),
                matches: &local == remote,
            });
        }
        fields.push(FieldComparison {
            field: "point_count".into(),
            local: cand.points.to_string(),
            remote: record.point_count.clone(),
            matches: cand.points.to_string() == record.point_count,
        });
        let full_match =
            fields.iter().all(|f| f.matches) && record.coefficients.len() == cand.g;
        Ok(CrosscheckReport {
            label,
            from_cache: record.from_cache,
            fields,
            full_match,
        })
    }
}

fn drift(label: &str, reason: &str, payload: &str) -> LmfdbError {
    LmfdbError::SchemaDrift {
        label: label.to_string(),
        reason: reason.to_string(),
        payload: payload.to_string(),
    }
}

fn value_to_bigint(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.to_string().parse().ok(),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// Parses one API payload into a record, accepting the Weil polynomial
/// either as the L-polynomial (constant coefficient 1) or as the
/// characteristic polynomial (leading coefficient 1), both ascending. The
/// parse is validated by re-deriving the label from the extracted fields.
fn parse_payload(label: &str, body: &str) -> Result<RemoteClassRecord, LmfdbError> {
    let v: serde_json::Value = serde_json::from_str(body)
        .map_err(|e| drift(label, &format!("payload is not JSON: {e}"), body))?;
    let data = v
        .get("data")
        .and_then(|d| d.as_array())
        .ok_or_else(|| drift(label, "missing data array", body))?;
    if data.is_empty() {
        return Err(LmfdbError::UnknownLabel(label.to_string()));
    }
    let rec = &data[0];
    let remote_label = rec
        .get("label")
        .and_then(|l| l.as_str())
        .unwrap_or(label)
        .to_string();
    let g = rec
        .get("g")
        .and_then(|x| x.as_u64())
        .ok_or_else(|| drift(label, "missing g", body))? as usize;
    let q = rec
        .get("q")
        .and_then(value_to_bigint)
        .ok_or_else(|| drift(label, "missing q", body))?;
    let poly: Vec<BigInt> = rec
        .get("poly")
        .or_else(|| rec.get("polynomial"))
        .or_else(|| rec.get("coeffs"))
        .and_then(|p| p.as_array())
        .map(|a| a.iter().filter_map(value_to_bigint).collect())
        .ok_or_else(|| drift(label, "missing polynomial coefficients", body))?;
    if poly.len() != 2 * g + 1 {
        return Err(drift(
            label,
            &format!("expected {} coefficients, got {}", 2 * g + 1, poly.len()),
            body,
        ));
    }
    let qp = arith::recognize_prime_power(&q)
        .map_err(|e| drift(label, &format!("remote q is unusable: {e}"), body))?;
    let readings = [
        poly[1..=g].to_vec(),
        (1..=g).map(|i| poly[2 * g - i].clone()).collect::<Vec<_>>(),
    ];
    let coeffs = readings
        .into_iter()
        .find(|a| {
            let full = weil::label_to_full(g, &q, a);
            weil::lmfdb_label(&full, &qp, g) == remote_label
        })
        .ok_or_else(|| drift(label, "coefficients do not reproduce the label", body))?;
    let full = weil::label_to_full(g, &q, &coeffs);
    let point_count = rec
        .get("abvar_counts")
        .and_then(|c| c.as_array())
        .and_then(|c| c.first())
        .and_then(value_to_bigint)
        .unwrap_or_else(|| full.eval(&BigInt::from(1)));
    let fetched_at = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    Ok(RemoteClassRecord {
        label: remote_label,
        g,
        q: q.to_string(),
        coefficients: coeffs.iter().map(|c| c.to_string()).collect(),
        point_count: point_count.to_string(),
        fetched_at,
        from_cache: false,
    })
}
