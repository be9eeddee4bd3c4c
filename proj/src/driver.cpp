#include "hankel/driver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hankel/hankel.hpp"
#include "hankel/orthopoly.hpp"

namespace hankel {

std::string to_string(Method m) {
  switch (m) {
    case Method::det: return "det";
    case Method::ortho: return "ortho";
    case Method::both: return "both";
  }
  return "both";
}

Method parse_method(const std::string& s) {
  if (s == "det") return Method::det;
  if (s == "ortho") return Method::ortho;
  if (s == "both") return Method::both;
  throw InvalidArgument("unknown method: " + s);
}

std::string to_string(Format f) {
  switch (f) {
    case Format::table: return "table";
    case Format::csv: return "csv";
    case Format::json: return "json";
  }
  return "table";
}

Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw InvalidArgument("unknown format: " + s);
}

void RunConfig::check() const {
  if (family == Family::zeta && k < 2) throw InvalidArgument("zeta family requires k >= 2");
  if (family == Family::custom && !moments_file) {
    throw InvalidArgument("custom family requires a moments file");
  }
  if (digits == 0) throw InvalidArgument("digits must be >= 1");
}

Method RunConfig::effective_method() const {
  if (method) return *method;
  return family == Family::custom ? Method::ortho : Method::both;
}

MomentSequence sequence_for(const RunConfig& config) {
  config.check();
  if (config.family == Family::custom) return load_moments(*config.moments_file);
  return MomentSequence::builtin(config.family, config.k);
}

Rational compare_reference(const ApproximantRecord& record, const ReferenceConstant& ref) {
  return ref.value() - record.value;
}

namespace {

struct DetPair {
  Rational p;
  Rational q;
};

// Determinants for n = 0 .. count-1, fanned out over a bounded set of
// threads. Each slot holds either a value or the exception it raised.
std::vector<std::pair<std::optional<DetPair>, std::exception_ptr>> det_range(
    const MomentSequence& seq, std::size_t count, unsigned workers) {
  std::vector<std::pair<std::optional<DetPair>, std::exception_ptr>> out(count);
  if (count == 0) return out;
  seq.prefetch(2 * count);

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t n = next++; n < count; n = next++) {
      try {
        Rational q = det_rational(build_q_matrix(seq, n));
        Rational p = -det_rational(build_p_matrix(seq, n));
        out[n].first = DetPair{std::move(p), std::move(q)};
      } catch (...) {
        out[n].second = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return out;
}

struct OrthoRun {
  std::vector<Rational> values;  // A_0 .. A_m
  std::vector<Rational> norms;   // prod t_0 .. t_i
  std::optional<RunFailure> failure;
};

OrthoRun ortho_range(const MomentSequence& seq, std::size_t n_max) {
  OrthoRun run;
  auto record = [&](const OrthoState& st) {
    run.values.push_back(st.partial_sum);
    run.norms.push_back(run.norms.empty() ? st.t.back() : run.norms.back() * st.t.back());
  };
  try {
    OrthoState st = ortho_init(seq);
    record(st);
    while (st.m < n_max) {
      st = ortho_step(std::move(st), seq);
      record(st);
    }
  } catch (const PositivityViolation& e) {
    run.failure = RunFailure{RunFailure::Kind::positivity, e.index(), e.what()};
  }
  return run;
}

ApproximantRecord make_record(std::size_t n, Rational p, Rational q, Method method,
                              const MomentSequence& seq, std::size_t digits) {
  ApproximantRecord r;
  r.n = n;
  r.value = p / q;
  r.p = std::move(p);
  r.q = std::move(q);
  r.decimal = to_decimal(r.value, digits);
  r.method = method;
  if (seq.reference()) r.reference_gap = compare_reference(r, *seq.reference());
  return r;
}

std::size_t require_moments(const MomentSequence& seq, std::size_t n_max) {
  const auto available = seq.available();
  if (available && *available < 2 * n_max + 2) {
    throw InvalidArgument(seq.name() + ": n_max = " + std::to_string(n_max) + " needs " +
                          std::to_string(2 * n_max + 2) + " moments, file has " +
                          std::to_string(*available));
  }
  return 2 * n_max + 2;
}

}  // namespace

RunResult run_convergence(const RunConfig& config) {
  return run_convergence(config, sequence_for(config));
}

RunResult run_convergence(const RunConfig& config, const MomentSequence& seq) {
  // The sequence is given, so family/moments_file are not consulted here.
  if (config.digits == 0) throw InvalidArgument("digits must be >= 1");
  seq.prefetch(require_moments(seq, config.n_max));
  const Method method = config.effective_method();
  RunResult result;

  if (method == Method::ortho) {
    OrthoRun run = ortho_range(seq, config.n_max);
    for (std::size_t n = 0; n < run.values.size(); ++n) {
      result.records.push_back(make_record(n, run.values[n] * run.norms[n], run.norms[n], method,
                                           seq, config.digits));
    }
    result.failure = run.failure;
    return result;
  }

  std::size_t count = config.n_max + 1;
  OrthoRun ortho;
  if (method == Method::both) {
    ortho = ortho_range(seq, config.n_max);
    count = ortho.values.size();
    result.failure = ortho.failure;
  }

  auto dets = det_range(seq, count, config.workers);
  for (std::size_t n = 0; n < count; ++n) {
    if (dets[n].second) {
      try {
        std::rethrow_exception(dets[n].second);
      } catch (const NonPositiveQ& e) {
        result.failure = RunFailure{RunFailure::Kind::positivity, n, e.what()};
        return result;
      }
    }
    DetPair& d = *dets[n].first;
    if (d.q.sign() <= 0) {
      result.failure = RunFailure{RunFailure::Kind::positivity, n,
                                  seq.name() + ": Q_" + std::to_string(n) + " = " + d.q.str() +
                                      " is not positive"};
      return result;
    }
    if (method == Method::both) {
      const Rational det_value = d.p / d.q;
      if (det_value != ortho.values[n] || d.q != ortho.norms[n]) {
        result.failure = RunFailure{
            RunFailure::Kind::mismatch, n,
            seq.name() + ": engines disagree at n = " + std::to_string(n) + ": det " +
                det_value.str() + " (Q " + d.q.str() + ") vs ortho " + ortho.values[n].str() +
                " (prod t " + ortho.norms[n].str() + ")"};
        return result;
      }
    }
    result.records.push_back(
        make_record(n, std::move(d.p), std::move(d.q), method, seq, config.digits));
  }
  return result;
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string ValidationReport::render() const {
  std::ostringstream os;
  os << "validate " << sequence << " n_max=" << n_max << "\n";
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << (all_passed() ? "all checks passed" : "validation FAILED") << "\n";
  return os.str();
}

ValidationReport cross_validate(const MomentSequence& seq, std::size_t n_max) {
  ValidationReport report;
  report.sequence = seq.name();
  report.n_max = n_max;
  seq.prefetch(require_moments(seq, n_max));

  OrthoRun ortho = ortho_range(seq, n_max);
  {
    CheckResult c{"positive-definite (t_i > 0)", true, ""};
    if (ortho.failure) {
      c.passed = false;
      c.detail = "first failing index " + std::to_string(ortho.failure->index) + ": " +
                 ortho.failure->message;
      report.positivity_failed = true;
    }
    report.checks.push_back(c);
  }
  const std::size_t count = ortho.values.size();
  auto dets = det_range(seq, count, 0);

  CheckResult engines{"det == ortho", true, ""};
  CheckResult factor{"Q_n == prod t_i", true, ""};
  CheckResult q_pos{"Q_n > 0", true, ""};
  for (std::size_t n = 0; n < count; ++n) {
    if (dets[n].second) {
      try {
        std::rethrow_exception(dets[n].second);
      } catch (const std::exception& e) {
        engines.passed = false;
        engines.detail = "n=" + std::to_string(n) + ": " + e.what();
      }
      continue;
    }
    const DetPair& d = *dets[n].first;
    if (q_pos.passed && d.q.sign() <= 0) {
      q_pos.passed = false;
      q_pos.detail = "n=" + std::to_string(n) + ": Q = " + d.q.str();
    }
    if (engines.passed && d.p / d.q != ortho.values[n]) {
      engines.passed = false;
      engines.detail = "first mismatch at n=" + std::to_string(n);
    }
    if (factor.passed && d.q != ortho.norms[n]) {
      factor.passed = false;
      factor.detail = "first mismatch at n=" + std::to_string(n);
    }
  }
  report.checks.push_back(engines);
  report.checks.push_back(factor);
  report.checks.push_back(q_pos);

  CheckResult mono{"P_n/Q_n nondecreasing", true, ""};
  for (std::size_t n = 1; n < count; ++n) {
    if (ortho.values[n] < ortho.values[n - 1]) {
      mono.passed = false;
      mono.detail = "decreases at n=" + std::to_string(n);
      break;
    }
  }
  report.checks.push_back(mono);

  if (count > 0) {
    const Rational a1 = seq.moment(1);
    CheckResult first{"P_0/Q_0 == a_1^2/a_2", ortho.values[0] == a1 * a1 / seq.moment(2), ""};
    report.checks.push_back(first);
  }

  {
    const std::size_t span = std::min<std::size_t>({n_max, 12, count == 0 ? 0 : count - 1}) + 1;
    CheckResult orth{"orthogonality of q_0..q_" + std::to_string(span - 1), true, ""};
    if (count > 0) {
      const auto qs = orthogonal_polynomials(seq, span);
      for (std::size_t i = 0; i < qs.size() && orth.passed; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          if (!inner_product(qs[i], qs[j], seq).is_zero()) {
            orth.passed = false;
            orth.detail = "(q_" + std::to_string(i) + ", q_" + std::to_string(j) + ") != 0";
            break;
          }
        }
      }
    }
    report.checks.push_back(orth);
  }

  if (seq.reference()) {
    const Rational ref = seq.reference()->value();
    CheckResult bound{"P_n/Q_n < " + seq.reference()->decimal, true, ""};
    for (std::size_t n = 0; n < count; ++n) {
      if (!(ortho.values[n] < ref)) {
        bound.passed = false;
        bound.detail = "reached at n=" + std::to_string(n);
        break;
      }
    }
    report.checks.push_back(bound);
  }
  return report;
}

std::string emit(const std::vector<ApproximantRecord>& records, Format format, std::size_t digits,
                 bool exact) {
  std::ostringstream os;
  switch (format) {
    case Format::table: {
      os << "n | P_n/Q_n | decimal\n";
      for (const auto& r : records) {
        std::string value = r.value.str();
        if (!exact && value.size() > kTableRationalWidth) value = "-";
        os << r.n << " | " << value << " | " << to_decimal(r.value, digits).text << "\n";
      }
      break;
    }
    case Format::csv: {
      os << "n,P,Q,value,gap\n";
      for (const auto& r : records) {
        os << r.n << ',' << r.p << ',' << r.q << ',' << r.value << ',';
        if (r.reference_gap) os << *r.reference_gap;
        os << "\n";
      }
      break;
    }
    case Format::json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : records) {
        nlohmann::ordered_json o;
        o["n"] = r.n;
        o["P"] = r.p.str();
        o["Q"] = r.q.str();
        o["value"] = r.value.str();
        o["decimal"] = to_decimal(r.value, digits).text;
        o["gap"] = r.reference_gap ? nlohmann::ordered_json(r.reference_gap->str())
                                   : nlohmann::ordered_json(nullptr);
        o["method"] = to_string(r.method);
        arr.push_back(std::move(o));
      }
      os << arr.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

std::vector<ApproximantRecord> records_from_json(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("records: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("records: expected an array");
  std::vector<ApproximantRecord> out;
  for (const auto& o : doc) {
    try {
      ApproximantRecord r;
      r.n = o.at("n").get<std::size_t>();
      r.p = parse_rational(o.at("P").get<std::string>());
      r.q = parse_rational(o.at("Q").get<std::string>());
      r.value = parse_rational(o.at("value").get<std::string>());
      const auto dec = o.at("decimal").get<std::string>();
      const auto dot = dec.find('.');
      r.decimal = {dec, dot == std::string::npos ? 0 : dec.size() - dot - 1};
      if (!o.at("gap").is_null()) r.reference_gap = parse_rational(o.at("gap").get<std::string>());
      r.method = parse_method(o.at("method").get<std::string>());
      out.push_back(std::move(r));
    } catch (const json::exception& e) {
      throw ParseError(std::string("records: ") + e.what());
    }
  }
  return out;
}

}  // namespace hankel
