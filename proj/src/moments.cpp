#include "hankel/moments.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "hankel/numerics.hpp"

namespace hankel {

namespace {

Integer pow_ui(unsigned long base, unsigned long exp) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

void require_index(unsigned long n, const char* who) {
  if (n == 0) throw InvalidArgument(std::string(who) + ": moment index must be >= 1");
}

}  // namespace

Rational gamma_moment(unsigned long n) {
  require_index(n, "gamma_moment");
  mpq_class sum = 0;
  Integer c = 1;  // C(n, i), updated in place
  for (unsigned long i = 0; i <= n; ++i) {
    if (i > 0) {
      c *= n - i + 1;
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), i);
    }
    Integer num = c * (static_cast<long>(n) - 2 * static_cast<long>(i) - 1);
    if (i % 2 == 1) num = -num;
    mpq_class term(num, pow_ui(i + 1, n + 1));
    term.canonicalize();
    sum += term;
  }
  sum *= factorial(n - 1);
  return Rational::from_mpq(sum);
}

Rational gompertz_moment(unsigned long n) {
  require_index(n, "gompertz_moment");
  // (n-1)!/i! summed from i = n-1 down to 0 as a running product.
  Integer sum = 0;
  Integer term = 1;
  for (unsigned long i = n; i-- > 0;) {
    sum += term;
    term *= i;
  }
  return Rational(sum);
}

Rational zeta_moment(unsigned long k, unsigned long n) {
  if (k < 2) throw InvalidArgument("zeta_moment: k must be >= 2");
  require_index(n, "zeta_moment");
  mpq_class sum = 0;
  Integer c = 1;  // C(n-1, i)
  for (unsigned long i = 0; i < n; ++i) {
    if (i > 0) {
      c *= n - i;
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), i);
    }
    mpq_class term(i % 2 == 0 ? c : Integer(-c), pow_ui(i + 1, k));
    term.canonicalize();
    sum += term;
  }
  return Rational::from_mpq(sum);
}

Rational factorial_moment(unsigned long n) {
  require_index(n, "factorial_moment");
  return Rational(factorial(n - 1));
}

std::string to_string(Family f) {
  switch (f) {
    case Family::gamma: return "gamma";
    case Family::gompertz: return "gompertz";
    case Family::zeta: return "zeta";
    case Family::factorial: return "factorial";
    case Family::custom: return "custom";
  }
  return "custom";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::gamma, Family::gompertz, Family::zeta, Family::factorial,
                   Family::custom}) {
    if (to_string(f) == name) return f;
  }
  throw InvalidArgument("unknown family: " + name);
}

struct MomentSequence::Cache {
  std::mutex mu;
  std::vector<Rational> values;  // values[i] holds a_{i+1}
};

MomentSequence::MomentSequence(std::string name, Family family, unsigned long k)
    : name_(std::move(name)), family_(family), k_(k), cache_(std::make_shared<Cache>()) {}

MomentSequence MomentSequence::gamma() {
  MomentSequence s("gamma", Family::gamma, 0);
  s.reference_ = ReferenceConstant{"gamma", "0.5772156649"};
  return s;
}

MomentSequence MomentSequence::gompertz() {
  MomentSequence s("gompertz", Family::gompertz, 0);
  s.reference_ = ReferenceConstant{"delta", "0.5963473623"};
  return s;
}

MomentSequence MomentSequence::zeta(unsigned long k) {
  if (k < 2) throw InvalidArgument("zeta: k must be >= 2");
  MomentSequence s("zeta" + std::to_string(k), Family::zeta, k);
  if (k == 2) s.reference_ = ReferenceConstant{"zeta(2)", "1.644934067"};
  if (k == 3) s.reference_ = ReferenceConstant{"zeta(3)", "1.202056903"};
  return s;
}

MomentSequence MomentSequence::factorial() {
  // L(e_0) = -gamma here, and the approximants do not converge to it, so no reference.
  return MomentSequence("factorial", Family::factorial, 0);
}

MomentSequence MomentSequence::custom(std::string name, std::vector<Rational> moments,
                                      std::optional<std::string> reference) {
  MomentSequence s(std::move(name), Family::custom, 0);
  s.cache_->values = std::move(moments);
  if (reference) {
    parse_decimal(*reference);
    s.reference_ = ReferenceConstant{s.name_, *reference};
  }
  return s;
}

MomentSequence MomentSequence::builtin(Family family, unsigned long k) {
  switch (family) {
    case Family::gamma: return gamma();
    case Family::gompertz: return gompertz();
    case Family::zeta: return zeta(k);
    case Family::factorial: return factorial();
    case Family::custom: break;
  }
  throw InvalidArgument("builtin: custom sequences need a moment list");
}

std::optional<std::size_t> MomentSequence::available() const {
  if (family_ != Family::custom) return std::nullopt;
  return cache_->values.size();
}

Rational MomentSequence::moment(std::size_t n) const {
  if (n == 0) throw InvalidArgument(name_ + ": a_0 is not part of the moment sequence");
  std::lock_guard lock(cache_->mu);
  auto& values = cache_->values;
  if (family_ == Family::custom) {
    if (n > values.size()) {
      throw IndexOutOfRange(name_ + ": moment a_" + std::to_string(n) + " requested but only " +
                            std::to_string(values.size()) + " supplied");
    }
    return values[n - 1];
  }
  while (values.size() < n) {
    const unsigned long idx = values.size() + 1;
    switch (family_) {
      case Family::gamma: values.push_back(gamma_moment(idx)); break;
      case Family::gompertz: values.push_back(gompertz_moment(idx)); break;
      case Family::zeta: values.push_back(zeta_moment(k_, idx)); break;
      case Family::factorial: values.push_back(factorial_moment(idx)); break;
      case Family::custom: break;
    }
  }
  return values[n - 1];
}

void MomentSequence::prefetch(std::size_t n) const {
  if (n == 0 || family_ == Family::custom) return;
  moment(n);
}

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& doc, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < doc.size(); ++i) {
    if (doc[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

MomentSequence parse_moments(const std::string& document) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(document, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(std::string("moment file: ") + e.what(), line, col);
  }
  if (!doc.is_object()) throw ParseError("moment file: top level must be an object", 1, 1);
  if (!doc.contains("name") || !doc["name"].is_string()) {
    throw ParseError("moment file: missing string field \"name\"");
  }
  if (!doc.contains("a") || !doc["a"].is_array()) {
    throw ParseError("moment file: missing array field \"a\"");
  }

  // Locate each element in the raw text so errors can point at a line.
  std::size_t cursor = document.find("\"a\"");
  std::vector<Rational> moments;
  const auto& a = doc["a"];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_string()) {
      throw ParseError("moment file: a[" + std::to_string(i) + "] is not a string");
    }
    const auto text = a[i].get<std::string>();
    const std::size_t at =
        cursor == std::string::npos ? std::string::npos : document.find('"' + text + '"', cursor);
    if (at != std::string::npos) cursor = at + text.size() + 2;
    try {
      moments.push_back(parse_rational(text));
    } catch (const Error& e) {
      // Point at the offending character inside the string when it is known.
      std::size_t inner = 0;
      if (const auto* pe = dynamic_cast<const ParseError*>(&e); pe && pe->column() > 0) {
        inner = pe->column() - 1;
      }
      auto [line, col] = at == std::string::npos ? std::pair<std::size_t, std::size_t>{0, 0}
                                                 : line_column(document, at + 1 + inner);
      throw ParseError("moment file: a[" + std::to_string(i) + "] = \"" + text + "\": " + e.what(),
                       line, col);
    }
  }

  std::optional<std::string> reference;
  if (doc.contains("reference") && !doc["reference"].is_null()) {
    if (!doc["reference"].is_string()) {
      throw ParseError("moment file: \"reference\" must be a decimal string");
    }
    reference = doc["reference"].get<std::string>();
    try {
      parse_decimal(*reference);
    } catch (const ParseError& e) {
      throw ParseError(std::string("moment file: reference: ") + e.what());
    }
  }
  return MomentSequence::custom(doc["name"].get<std::string>(), std::move(moments), reference);
}

MomentSequence load_moments(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open moment file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading moment file " + path.string());
  return parse_moments(buf.str());
}

std::string moments_to_json(const MomentSequence& seq, std::size_t count) {
  nlohmann::ordered_json doc;
  doc["name"] = seq.name();
  auto a = nlohmann::ordered_json::array();
  for (std::size_t n = 1; n <= count; ++n) a.push_back(seq.moment(n).str());
  doc["a"] = std::move(a);
  if (seq.reference()) doc["reference"] = seq.reference()->decimal;
  return doc.dump(2) + "\n";
}

}  // namespace hankel
