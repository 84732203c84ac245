#include "gatecost/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "gatecost/ham_canonical.hpp"
#include "gatecost/linalg.hpp"

namespace gatecost {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_double_strict(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  if (t.empty()) throw ParseError(what + ": empty number");
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size())
    throw ParseError(what + ": '" + t + "' is not a number");
  if (!std::isfinite(v)) throw ParseError(what + ": '" + t + "' is not finite");
  return v;
}

std::vector<double> parse_double_list(const std::string& text, int count,
                                      const std::string& what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string piece =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    out.push_back(parse_double_strict(piece, what));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (int(out.size()) != count)
    throw ParseError(what + ": expected " + std::to_string(count) +
                     " comma-separated numbers");
  return out;
}

// "name(args)" -> args, or nullopt when spec doesn't start with "name(".
std::optional<std::string> call_args(const std::string& spec,
                                     const std::string& name) {
  if (spec.size() < name.size() + 2 || spec.compare(0, name.size(), name) != 0)
    return std::nullopt;
  if (spec[name.size()] != '(' || spec.back() != ')') return std::nullopt;
  return spec.substr(name.size() + 1, spec.size() - name.size() - 2);
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string complex_json(const cplx& z) {
  return "[" + fmt_g17(z.real()) + ", " + fmt_g17(z.imag()) + "]";
}

std::string mat2_json(const Mat2& m) {
  std::string out = "[";
  for (int r = 0; r < 2; ++r) {
    out += r == 0 ? "[" : ", [";
    for (int c = 0; c < 2; ++c) {
      if (c) out += ", ";
      out += complex_json(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

std::string mat4_json(const Mat4& m) {
  std::string out = "[";
  for (int r = 0; r < 4; ++r) {
    out += r == 0 ? "[" : ", [";
    for (int c = 0; c < 4; ++c) {
      if (c) out += ", ";
      out += complex_json(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

std::string vec3_json(const Vec3& v) {
  return "[" + fmt_g17(v[0]) + ", " + fmt_g17(v[1]) + ", " + fmt_g17(v[2]) +
         "]";
}

std::string shift_json(const IntegerShift& n) {
  return "[" + std::to_string(n.n1) + ", " + std::to_string(n.n2) + ", " +
         std::to_string(n.n3) + "]";
}

std::string shift_str(const IntegerShift& n) {
  return "(" + std::to_string(n.n1) + "," + std::to_string(n.n2) + "," +
         std::to_string(n.n3) + ")";
}

// Human-readable scalar: shortest decimal, plus a pi/4 annotation when exact.
std::string pretty_scalar(double x) {
  std::string out = fmt_float(x);
  const std::string ann = pi_annotation(x);
  if (!ann.empty()) out += " (" + ann + ")";
  return out;
}

std::string vec3_str(const Vec3& v, bool annotate = false) {
  std::string out = "(";
  for (int i = 0; i < 3; ++i) {
    if (i) out += ", ";
    out += annotate ? pretty_scalar(v[i]) : fmt_float(v[i]);
  }
  return out + ")";
}

std::string finite_or_null(double x) {
  return std::isfinite(x) ? fmt_g17(x) : std::string("null");
}

std::string finite_or_infinite(double x) {
  return std::isfinite(x) ? fmt_float(x) : std::string("infinite");
}

// ---- JSON -> matrix helpers (nlohmann used for parsing only) ----

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("complex entries must be [re, im] number pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

Mat2 mat2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected a 2x2 matrix");
  Mat2 m;
  for (int r = 0; r < 2; ++r) {
    if (!j[r].is_array() || j[r].size() != 2)
      throw ParseError("expected a 2x2 matrix");
    for (int c = 0; c < 2; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

Mat4 mat4_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("expected a 4x4 matrix");
  Mat4 m;
  for (int r = 0; r < 4; ++r) {
    if (!j[r].is_array() || j[r].size() != 4)
      throw ParseError("expected a 4x4 matrix");
    for (int c = 0; c < 4; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

}  // namespace

// ---- formatting ----

std::string fmt_g17(double x) {
  if (x == 0.0) return "0";  // never emit "-0": it does not survive a parse
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_float(double x) {
  if (x == 0.0) return "0";
  for (int prec = 15; prec <= 17; ++prec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) return buf;
  }
  return fmt_g17(x);
}

std::string pi_annotation(double x) {
  const double m = x / kQuarterPi;
  const long long k = std::llround(m);
  if (k == 0 || k < -16 || k > 16) return "";
  if (std::abs(m - double(k)) > 1e-9 * std::max(1.0, std::abs(m))) return "";
  long long num = k, den = 4;
  const long long g = std::gcd(num < 0 ? -num : num, den);
  num /= g;
  den /= g;
  std::string s;
  if (num < 0) {
    s += "-";
    num = -num;
  }
  if (num != 1) s += std::to_string(num);
  s += "\xcf\x80";  // UTF-8 pi
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

// ---- parsing ----

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Mat4 parse_matrix4_json(const std::string& text) {
  return mat4_from_json(parse_json_text(text, "gate matrix"));
}

Mat3 parse_matrix3_json(const std::string& text) {
  const json j = parse_json_text(text, "coupling matrix");
  if (!j.is_array() || j.size() != 3)
    throw ParseError("expected a 3x3 real matrix");
  Mat3 m;
  for (int r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3)
      throw ParseError("expected a 3x3 real matrix");
    for (int c = 0; c < 3; ++c) {
      if (!j[r][c].is_number())
        throw ParseError("coupling entries must be real numbers");
      m(r, c) = j[r][c].get<double>();
    }
  }
  return m;
}

std::string emit_matrix4_json(const Mat4& m) {
  std::string out = "[\n";
  for (int r = 0; r < 4; ++r) {
    out += "  [";
    for (int c = 0; c < 4; ++c) {
      if (c) out += ", ";
      out += complex_json(m(r, c));
    }
    out += r == 3 ? "]\n" : "],\n";
  }
  return out + "]\n";
}

Mat4 parse_gate(const std::string& spec, double tol) {
  const std::string s = trim(spec);
  const cplx i{0.0, 1.0};

  if (s == "identity") return Mat4::Identity();
  if (s == "cnot") {
    Mat4 m = Mat4::Zero();
    m(0, 0) = m(1, 1) = 1.0;
    m(2, 3) = m(3, 2) = 1.0;
    return m;
  }
  if (s == "cz") {
    Mat4 m = Mat4::Identity();
    m(3, 3) = -1.0;
    return m;
  }
  if (s == "swap") {
    Mat4 m = Mat4::Zero();
    m(0, 0) = m(3, 3) = 1.0;
    m(1, 2) = m(2, 1) = 1.0;
    return m;
  }
  if (s == "xy" || s == "iswap") {
    Mat4 m = Mat4::Zero();
    m(0, 0) = m(3, 3) = 1.0;
    m(1, 2) = m(2, 1) = i;
    return m;
  }
  if (const auto args = call_args(s, "cphase")) {
    const double theta = parse_double_strict(*args, "cphase angle");
    if (!(theta > -2.0 * kPi && theta <= 2.0 * kPi))
      throw ParseError("cphase angle must lie in (-2*pi, 2*pi]");
    Mat4 m = Mat4::Identity();
    m(3, 3) = std::exp(i * theta);
    return m;
  }
  if (const auto args = call_args(s, "canonical")) {
    const auto v = parse_double_list(*args, 3, "canonical coupling");
    return exp_canonical(Vec3{v[0], v[1], v[2]});
  }
  if (const auto args = call_args(s, "matrix")) {
    const Mat4 m = parse_matrix4_json(read_file(trim(*args)));
    if (!is_unitary(m, std::max(tol, kTolMatrix)))
      throw NotUnitaryError("gate matrix from '" + trim(*args) +
                            "' is not unitary");
    return m;
  }
  throw ParseError(
      "unrecognized gate '" + s +
      "' (expected identity|cnot|cz|swap|xy|iswap|cphase(t)|" +
      "canonical(l1,l2,l3)|matrix(path))");
}

ParsedHamiltonian parse_hamiltonian(const std::string& spec, double tol) {
  const std::string s = trim(spec);
  ParsedHamiltonian out;

  const auto from_raw = [&](const Vec3& raw) {
    const Vec3 canon = weyl_reduce(raw);
    if (!(canon.array() == raw.array()).all())
      out.warnings.push_back(
          "coupling " + vec3_str(raw) + " reordered to the canonical cone " +
          vec3_str(canon) + " (h1 >= h2 >= |h3|); costs are unchanged");
    out.canonical = HamiltonianVector{canon[0], canon[1], canon[2]};
  };

  if (s == "ising") {
    out.canonical = HamiltonianVector{1.0, 0.0, 0.0};
    return out;
  }
  if (s.rfind("ising:", 0) == 0) {
    const double g = parse_double_strict(s.substr(6), "ising strength");
    from_raw(Vec3{g, 0.0, 0.0});
    if (g == 0.0)
      out.warnings.push_back(
          "zero interaction: every non-local gate is infeasible");
    return out;
  }
  if (s == "xy") {
    out.canonical = HamiltonianVector{1.0, 1.0, 0.0};
    return out;
  }
  if (s == "heisenberg") {
    out.canonical = HamiltonianVector{1.0, 1.0, 1.0};
    return out;
  }
  if (s.rfind("vec:", 0) == 0) {
    const auto v = parse_double_list(s.substr(4), 3, "coupling vector");
    from_raw(Vec3{v[0], v[1], v[2]});
    return out;
  }
  if (s.rfind("coupling:", 0) == 0) {
    const Mat3 m = parse_matrix3_json(read_file(trim(s.substr(9))));
    out.canonical = canonical_hamiltonian(m);
    return out;
  }
  if (s.rfind("matrix:", 0) == 0) {
    const Mat4 m = parse_matrix4_json(read_file(trim(s.substr(7))));
    out.canonical = canonical_hamiltonian(m, std::max(tol, kTolMatrix));
    const LocalParts lp = local_parts(m);
    if (lp.a.norm() > 1e-9 || lp.b.norm() > 1e-9)
      out.warnings.push_back(
          "discarded single-qubit terms (|a| = " + fmt_float(lp.a.norm()) +
          ", |b| = " + fmt_float(lp.b.norm()) +
          "); fast local control absorbs them at no cost");
    if (std::abs(lp.identity) > 1e-9)
      out.warnings.push_back("discarded identity offset " +
                             fmt_float(lp.identity) +
                             " (global phase only)");
    return out;
  }
  throw ParseError(
      "unrecognized interaction '" + s +
      "' (expected ising[:h]|xy|heisenberg|vec:h1,h2,h3|coupling:path|" +
      "matrix:path)");
}

double tol_from_env(double fallback) {
  const char* env = std::getenv("GATECOST_TOL");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !std::isfinite(v) || v <= 0.0)
    throw ParseError("GATECOST_TOL must be a positive real number, got '" +
                     std::string(env) + "'");
  return v;
}

// ---- report emitters ----

std::string emit_cost_json(const CostReport& report) {
  std::string out = "{\n";
  out += "  \"cost\": " + finite_or_null(report.cost) + ",\n";
  out += std::string("  \"feasible\": ") +
         (report.feasible() ? "true" : "false") + ",\n";
  out += "  \"branch\": " + shift_json(report.branch) + ",\n";
  out += "  \"simVector\": " + vec3_json(report.simVector.vec()) + ",\n";
  out += "  \"preCosts\": {\n";
  out += "    \"(0,0,0)\": " + finite_or_null(report.precostNoShift) + ",\n";
  out += "    \"(-1,0,0)\": " + finite_or_null(report.precostShift) + "\n";
  out += "  },\n";
  out += std::string("  \"regionFlag\": ") +
         (report.regionFlag ? "true" : "false") + "\n";
  return out + "}\n";
}

std::string emit_cost_summary(const CostReport& report) {
  std::string out;
  if (!report.feasible()) {
    out += "cost = infinite (gate is non-local, interaction is zero)\n";
  } else {
    out += "cost = " + pretty_scalar(report.cost) + ", branch " +
           shift_str(report.branch) + "\n";
    out += "simulated coupling = " + vec3_str(report.simVector.vec()) + "\n";
  }
  out += "pre-costs: (0,0,0) -> " + finite_or_infinite(report.precostNoShift) +
         ", (-1,0,0) -> " + finite_or_infinite(report.precostShift) + "\n";
  out += std::string("no-shift region: ") + (report.regionFlag ? "yes" : "no") +
         "\n";
  return out;
}

namespace {

std::string witness_json(const std::optional<HamiltonianVector>& w,
                         const CanonicalGateVector& first,
                         const CanonicalGateVector& second) {
  if (!w) return "null";
  const double cf = interaction_cost(first, *w).cost;
  const double cs = interaction_cost(second, *w).cost;
  return "{\"h\": " + vec3_json(w->vec()) +
         ", \"costFirst\": " + finite_or_null(cf) +
         ", \"costSecond\": " + finite_or_null(cs) + "}";
}

std::string witness_summary(const char* label, const HamiltonianVector& w,
                            const CanonicalGateVector& first,
                            const CanonicalGateVector& second) {
  const double cf = interaction_cost(first, w).cost;
  const double cs = interaction_cost(second, w).cost;
  return std::string("witness (") + label + "): h = " + vec3_str(w.vec()) +
         ", cost first = " + finite_or_infinite(cf) +
         ", cost second = " + finite_or_infinite(cs) + "\n";
}

}  // namespace

std::string emit_order_json(const OrderVerdict& verdict,
                            const CanonicalGateVector& first,
                            const CanonicalGateVector& second) {
  std::string out = "{\n";
  out += std::string("  \"relation\": \"") + relation_name(verdict.relation) +
         "\",\n";
  out += std::string("  \"exact\": ") + (verdict.exact ? "true" : "false") +
         ",\n";
  out += "  \"first\": " + vec3_json(first.vec()) + ",\n";
  out += "  \"second\": " + vec3_json(second.vec()) + ",\n";
  out += "  \"witnessFirstCostlier\": " +
         witness_json(verdict.witnessFirstCostlier, first, second) + ",\n";
  out += "  \"witnessSecondCostlier\": " +
         witness_json(verdict.witnessSecondCostlier, first, second) + "\n";
  return out + "}\n";
}

std::string emit_order_summary(const OrderVerdict& verdict,
                               const CanonicalGateVector& first,
                               const CanonicalGateVector& second) {
  std::string out = std::string("relation = ") +
                    relation_name(verdict.relation) +
                    (verdict.exact ? " [exact]" : " [sampled]") + "\n";
  out += "first  = " + vec3_str(first.vec(), true) + "\n";
  out += "second = " + vec3_str(second.vec(), true) + "\n";
  if (verdict.witnessFirstCostlier)
    out += witness_summary("first costlier", *verdict.witnessFirstCostlier,
                           first, second);
  if (verdict.witnessSecondCostlier)
    out += witness_summary("second costlier", *verdict.witnessSecondCostlier,
                           first, second);
  return out;
}

std::string emit_schedule_json(const SimulationSchedule& schedule) {
  std::string out = "{\n";
  out += "  \"totalTime\": " + fmt_g17(schedule.totalTime) + ",\n";
  out += "  \"branch\": " + shift_json(schedule.branch) + ",\n";
  out += "  \"segments\": [";
  for (std::size_t k = 0; k < schedule.segments.size(); ++k) {
    const ScheduleSegment& seg = schedule.segments[k];
    out += k == 0 ? "\n" : ",\n";
    out += "    {\n";
    out += "      \"duration\": " + fmt_g17(seg.duration) + ",\n";
    out += "      \"preLocalA\": " + mat2_json(seg.preLocalA) + ",\n";
    out += "      \"preLocalB\": " + mat2_json(seg.preLocalB) + ",\n";
    out += "      \"postLocalA\": " + mat2_json(seg.postLocalA) + ",\n";
    out += "      \"postLocalB\": " + mat2_json(seg.postLocalB) + "\n";
    out += "    }";
  }
  out += schedule.segments.empty() ? "],\n" : "\n  ],\n";
  out += "  \"outerPre\": {\"a\": " + mat2_json(schedule.outerPreA) +
         ", \"b\": " + mat2_json(schedule.outerPreB) + "},\n";
  out += "  \"outerPost\": {\"a\": " + mat2_json(schedule.outerPostA) +
         ", \"b\": " + mat2_json(schedule.outerPostB) + "},\n";
  out += "  \"shiftCorrection\": " + mat4_json(schedule.shiftCorrection) + "\n";
  return out + "}\n";
}

std::string emit_schedule_summary(const SimulationSchedule& schedule) {
  std::string out = "total time = " + pretty_scalar(schedule.totalTime) +
                    ", branch " + shift_str(schedule.branch) +
                    ", segments = " + std::to_string(schedule.segments.size()) +
                    "\n";
  for (std::size_t k = 0; k < schedule.segments.size(); ++k)
    out += "  segment " + std::to_string(k + 1) +
           ": duration = " + pretty_scalar(schedule.segments[k].duration) +
           "\n";
  const bool shifted =
      (schedule.shiftCorrection - Mat4::Identity()).cwiseAbs().maxCoeff() >
      1e-15;
  out += std::string("shift correction: ") + (shifted ? "yes" : "no") + "\n";
  return out;
}

SimulationSchedule parse_schedule_json(const std::string& text) {
  const json j = parse_json_text(text, "schedule");
  try {
    if (!j.is_object()) throw ParseError("schedule: expected a JSON object");
    SimulationSchedule s;
    s.totalTime = j.at("totalTime").get<double>();
    const json& br = j.at("branch");
    if (!br.is_array() || br.size() != 3)
      throw ParseError("schedule: branch must be [n1, n2, n3]");
    s.branch = IntegerShift{br[0].get<int>(), br[1].get<int>(),
                            br[2].get<int>()};
    for (const json& js : j.at("segments")) {
      ScheduleSegment seg;
      seg.duration = js.at("duration").get<double>();
      seg.preLocalA = mat2_from_json(js.at("preLocalA"));
      seg.preLocalB = mat2_from_json(js.at("preLocalB"));
      seg.postLocalA = mat2_from_json(js.at("postLocalA"));
      seg.postLocalB = mat2_from_json(js.at("postLocalB"));
      s.segments.push_back(seg);
    }
    s.outerPreA = mat2_from_json(j.at("outerPre").at("a"));
    s.outerPreB = mat2_from_json(j.at("outerPre").at("b"));
    s.outerPostA = mat2_from_json(j.at("outerPost").at("a"));
    s.outerPostB = mat2_from_json(j.at("outerPost").at("b"));
    s.shiftCorrection = mat4_from_json(j.at("shiftCorrection"));
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("schedule: ") + e.what());
  }
}

std::string emit_canon_gate_json(const LocalFactorization& f) {
  std::string out = "{\n";
  out += "  \"canonical\": " + vec3_json(f.core.vec()) + ",\n";
  out += "  \"globalPhase\": " + complex_json(f.globalPhase) + ",\n";
  out += "  \"preLocal\": {\"a\": " + mat2_json(f.u1) +
         ", \"b\": " + mat2_json(f.v1) + "},\n";
  out += "  \"postLocal\": {\"a\": " + mat2_json(f.u2) +
         ", \"b\": " + mat2_json(f.v2) + "}\n";
  return out + "}\n";
}

std::string emit_canon_gate_summary(const LocalFactorization& f) {
  std::string out = "canonical vector = " + vec3_str(f.core.vec(), true) + "\n";
  out += "global phase = " + fmt_float(f.globalPhase.real()) +
         (f.globalPhase.imag() < 0.0 ? " - " : " + ") +
         fmt_float(std::abs(f.globalPhase.imag())) + "i\n";
  return out;
}

std::string emit_canon_ham_json(const ParsedHamiltonian& h) {
  std::string out = "{\n";
  out += "  \"canonical\": " + vec3_json(h.canonical.vec()) + ",\n";
  out += "  \"warnings\": [";
  for (std::size_t k = 0; k < h.warnings.size(); ++k) {
    if (k) out += ", ";
    out += "\"" + json_escape(h.warnings[k]) + "\"";
  }
  out += "]\n";
  return out + "}\n";
}

// ---- chart grids ----

std::string chart_cell_csv(const HamiltonianVector& h, int resolution) {
  if (resolution < 2)
    throw std::invalid_argument("chart resolution must be >= 2");
  const int r = resolution;
  std::string out = "l1,l2,l3,cost,branch\n";
  for (int i = 0; i < r; ++i) {
    const double l1 = i == r - 1 ? kQuarterPi : kQuarterPi * i / (r - 1);
    for (int j = 0; j < r; ++j) {
      const double l2 = j == r - 1 ? l1 : l1 * j / (r - 1);
      for (int k = 0; k < r; ++k) {
        // On the l1 = pi/4 face only l3 >= 0 representatives are canonical.
        const double l3 = (i == r - 1) ? l2 * k / (r - 1)
                                       : -l2 + 2.0 * l2 * k / (r - 1);
        const CanonicalGateVector g{l1, l2, l3};
        const CostReport report = interaction_cost(g, h);
        const int branch = report.branch == IntegerShift{} ? 1 : 2;
        out += fmt_g17(l1) + "," + fmt_g17(l2) + "," + fmt_g17(l3) + "," +
               fmt_g17(report.cost) + "," + std::to_string(branch) + "\n";
      }
    }
  }
  return out;
}

std::string chart_cone_csv(const CanonicalGateVector& lambda, int resolution) {
  if (resolution < 2)
    throw std::invalid_argument("chart resolution must be >= 2");
  const int r = resolution;
  std::string out = "h1,h2,h3,cost\n";
  for (int j = 0; j < r; ++j) {
    const double h2 = double(j) / (r - 1);
    for (int k = 0; k < r; ++k) {
      const double h3 = -h2 + 2.0 * h2 * k / (r - 1);
      const HamiltonianVector h{1.0, h2, h3};
      out += fmt_g17(1.0) + "," + fmt_g17(h2) + "," + fmt_g17(h3) + "," +
             fmt_g17(interaction_cost(lambda, h).cost) + "\n";
    }
  }
  return out;
}

}  // namespace gatecost
