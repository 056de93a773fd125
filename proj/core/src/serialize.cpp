#include "cgw/serialize.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "cgw/error.hpp"

namespace cgw {

namespace {

using Json = nlohmann::ordered_json;

std::string big_text(const BigRational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Json header_json(const Header& h) {
  Json j = Json::object();
  for (const auto& [k, v] : h) {
    j[k] = v;
  }
  return j;
}

std::string dump(Json j) { return j.dump(2) + "\n"; }

std::string ln_text(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", std::log(static_cast<double>(v)));
  return buf;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto p = s.find(sep);
    out.push_back(s.substr(0, p));
    if (p == std::string_view::npos) {
      return out;
    }
    s = s.substr(p + 1);
  }
}

std::string_view trim(std::string_view s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) {
    return {};
  }
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::uint64_t parse_u64(std::string_view s) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InputError("malformed CSV number '" + std::string(s) + "'");
  }
  return v;
}

Json word_json(const Word& w) { return to_string(w); }

Json counterexamples(const std::vector<Counterexample>& cs) {
  Json arr = Json::array();
  for (const auto& c : cs) {
    Json j;
    j["C"] = c.C;
    if (c.n == 0) {
      j["n"] = nullptr;
      j["note"] = "no n checkable for this C";
    } else {
      j["n"] = c.n;
      j["f_n"] = big_text(c.f_value);
      j["g_Cn"] = big_text(c.g_value);
    }
    arr.push_back(j);
  }
  return arr;
}

Json qg_json(const QuasiGeodesicReport& q) {
  Json j;
  j["status"] = to_string(q.status);
  j["subwords_checked"] = q.subwords_checked;
  j["inconclusive"] = q.inconclusive;
  j["worst_subword"] = word_json(q.worst);
  j["worst_distance"] = q.worst_distance;
  j["worst_distance_exact"] = q.worst_distance_exact;
  j["worst_margin"] = to_string(q.worst_margin);
  return j;
}

Json piece_json(const PieceReport& p, const SymmetrizedSet& S) {
  const Word& R = S.members()[p.r];
  const Word& R2 = S.members()[p.r2];
  Json j;
  j["kind"] = to_string(p.kind);
  j["R"] = word_json(R);
  j["R_index"] = p.r;
  j["R2"] = word_json(R2);
  j["R2_index"] = p.r2;
  j["U"] = word_json(R.subword(0, p.u_len));
  j["U_position"] = 0;
  j["U2"] = word_json(R2.subword(p.u2_start, p.u2_len));
  j["U2_position"] = p.u2_start;
  if (p.kind == PieceKind::epsilon_prime) {
    j["sign"] = p.sign;
  }
  j["Y"] = word_json(p.y);
  j["Z"] = word_json(p.z);
  j["ratio"] = to_string(p.ratio);
  return j;
}

}  // namespace

std::string format_header(const Header& h) {
  std::string out;
  for (const auto& [k, v] : h) {
    out += "# " + k + ": " + v + "\n";
  }
  return out;
}

std::string to_csv(const GrowthTable& t, const Header& header) {
  std::string out = format_header(header);
  out += "# kind: " + to_string(t.kind) + "\n";
  out += "# engine: " + t.engine + "\n";
  out += t.bracketed ? "n,value,lower,upper\n" : "n,value\n";
  for (std::size_t n = 0; n < t.values.size(); ++n) {
    out += std::to_string(n) + "," + std::to_string(t.values[n]);
    if (t.bracketed) {
      out += "," + std::to_string(t.lower[n]) + "," + std::to_string(t.upper[n]);
    }
    out += "\n";
  }
  return out;
}

GrowthTable table_from_csv(std::string_view text) {
  GrowthTable t;
  bool columns_seen = false;
  for (std::string_view line : split(text, '\n')) {
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    if (line[0] == '#') {
      auto body = trim(line.substr(1));
      if (body.substr(0, 5) == "kind:") {
        t.kind = parse_growth_kind(trim(body.substr(5)));
      } else if (body.substr(0, 7) == "engine:") {
        t.engine = std::string(trim(body.substr(7)));
      }
      continue;
    }
    if (!columns_seen && line[0] == 'n') {
      columns_seen = true;
      t.bracketed = line.find("lower") != std::string_view::npos;
      continue;
    }
    auto cells = split(line, ',');
    if (cells.size() != 2 && cells.size() != 4) {
      throw InputError("CSV row must have 2 or 4 columns: '" +
                       std::string(line) + "'");
    }
    if (parse_u64(cells[0]) != t.values.size()) {
      throw InputError("CSV rows must list n = 0, 1, 2, ... in order");
    }
    t.values.push_back(parse_u64(cells[1]));
    if (cells.size() == 4) {
      t.bracketed = true;
      t.lower.push_back(parse_u64(cells[2]));
      t.upper.push_back(parse_u64(cells[3]));
    }
  }
  return t;
}

SampledFunction function_from_csv(std::string_view text, std::string name) {
  GrowthTable t = table_from_csv(text);
  SampledFunction f;
  f.name = std::move(name);
  f.provenance = "table: " + to_string(t.kind) +
                 (t.engine.empty() ? std::string() : " of " + t.engine);
  // A table starting at n = 0 contributes n >= 1 only.
  for (std::size_t n = 1; n < t.values.size(); ++n) {
    if (t.values[n] < 1) {
      throw InputError("sampled values must be at least 1");
    }
    f.values.emplace_back(t.values[n]);
  }
  return f;
}

std::string to_json(const GrowthTable& t, const Header& header) {
  Json j;
  j["provenance"] = header_json(header);
  j["kind"] = to_string(t.kind);
  j["engine"] = t.engine;
  j["generators"] = t.generators;
  j["budget"] = t.budget;
  j["exactness"] = t.bracketed ? "bracketed" : "exact";
  j["values"] = t.values;
  if (t.bracketed) {
    j["lower"] = t.lower;
    j["upper"] = t.upper;
  }
  if (!t.note.empty()) {
    j["note"] = t.note;
  }
  return dump(j);
}

GrowthTable table_from_json(std::string_view text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw InputError("growth table JSON is malformed");
  }
  try {
    GrowthTable t;
    t.kind = parse_growth_kind(j.at("kind").get<std::string>());
    t.engine = j.at("engine").get<std::string>();
    t.generators = j.at("generators").get<std::vector<std::string>>();
    t.budget = j.at("budget").get<std::size_t>();
    t.bracketed = j.at("exactness").get<std::string>() == "bracketed";
    t.values = j.at("values").get<std::vector<std::uint64_t>>();
    if (t.bracketed) {
      t.lower = j.at("lower").get<std::vector<std::uint64_t>>();
      t.upper = j.at("upper").get<std::vector<std::uint64_t>>();
    }
    if (j.contains("note")) {
      t.note = j.at("note").get<std::string>();
    }
    return t;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("growth table JSON: ") + ex.what());
  }
}

std::string to_json(const EquivVerdict& v, const Header& header) {
  Json j;
  j["provenance"] = header_json(header);
  j["relation"] = to_string(v.relation);
  j["f"] = v.f_name;
  j["g"] = v.g_name;
  j["N"] = v.N;
  j["Cmax"] = v.Cmax;
  if (v.relation != EquivVerdict::Relation::refuted) {
    j["C"] = v.C;
  }
  if (v.C_reverse) {
    j["C_reverse"] = *v.C_reverse;
  }
  if (v.relation == EquivVerdict::Relation::refuted) {
    j["failing_direction"] = v.failing_direction;
    j["refutations"] = counterexamples(v.refutations);
  }
  j["scope"] = v.note;
  return dump(j);
}

std::string to_json(const SCReport& r, const SymmetrizedSet& S,
                    const Header& header) {
  Json j;
  j["provenance"] = header_json(header);
  Json p;
  p["eps"] = r.params.eps;
  p["mu"] = to_string(r.params.mu);
  p["lambda"] = to_string(r.params.lambda);
  p["c"] = r.params.c;
  p["rho"] = r.params.rho;
  j["params"] = p;
  j["letter_bound"] = r.letter_bound;
  j["scope"] = "relative to letter-bound " + std::to_string(r.letter_bound);
  Json base = Json::array();
  for (const Word& w : S.base()) {
    base.push_back(word_json(w));
  }
  j["relators"] = base;
  j["symmetrized_size"] = S.size();

  Json c1;
  c1["status"] = to_string(r.length);
  Json shorts = Json::array();
  for (std::size_t i : r.short_relators) {
    Json s;
    s["R"] = word_json(S.members()[i]);
    s["length"] = S.members()[i].length();
    shorts.push_back(s);
  }
  c1["violations"] = shorts;
  j["condition_1_length"] = c1;

  Json c2;
  c2["status"] = to_string(r.quasigeodesic);
  Json reports = Json::array();
  for (std::size_t i = 0; i < r.quasigeodesic_reports.size(); ++i) {
    Json q = qg_json(r.quasigeodesic_reports[i]);
    q["R"] = word_json(S.base()[i]);
    reports.push_back(q);
  }
  c2["relators"] = reports;
  j["condition_2_quasigeodesic"] = c2;

  Json c3;
  c3["epsilon_status"] = to_string(r.pieces);
  c3["epsilon_prime_status"] = to_string(r.prime_pieces);
  c3["pieces_found"] = r.pieces_found;
  Json viol = Json::array();
  for (const PieceReport& p2 : r.violations) {
    viol.push_back(piece_json(p2, S));
  }
  c3["violations"] = viol;
  j["condition_3_pieces"] = c3;
  j["C"] = to_string(r.c);
  j["C1"] = to_string(r.c1);
  return dump(j);
}

std::string to_json(const WWord& w, const Header& header) {
  Json j;
  j["provenance"] = header_json(header);
  j["word"] = word_json(w.word);
  j["length"] = w.word.length();
  j["n"] = w.a.size();
  Json cert = Json::array();
  for (const auto& h : w.certificate) {
    Json c;
    c["hypothesis"] = h.name;
    c["status"] = h.status;
    c["detail"] = h.detail;
    cert.push_back(c);
  }
  j["certificate"] = cert;
  j["certified"] = w.certified();
  return dump(j);
}

std::string to_json(const GroupEngine& e, const HatMetricResult& r,
                    const Header& header) {
  Json j;
  j["provenance"] = header_json(header);
  j["h1"] = e.format(view(r.h1));
  j["h2"] = e.format(view(r.h2));
  j["radius"] = r.radius;
  if (r.value) {
    j["value"] = *r.value;
  } else {
    j["value"] = "not-found-within(" + std::to_string(r.radius) + ")";
  }
  return dump(j);
}

std::string to_json(const GroupEngine& e, const TranslationEstimate& t,
                    const Header& header) {
  Json j;
  j["provenance"] = header_json(header);
  j["element"] = e.format(view(t.element));
  Json samples = Json::array();
  for (std::size_t n = 1; n <= t.lengths.size(); ++n) {
    Json s;
    s["n"] = n;
    s["length"] = t.lengths[n - 1];
    s["ratio"] = to_string(Rational(static_cast<std::int64_t>(t.lengths[n - 1]),
                                    static_cast<std::int64_t>(n)));
    samples.push_back(s);
  }
  j["samples"] = samples;
  j["inf"] = to_string(Rational(static_cast<std::int64_t>(t.inf_numerator),
                                static_cast<std::int64_t>(t.inf_denominator)));
  j["distorted"] = t.distorted;
  return dump(j);
}

std::string plot_data(const GrowthTable& t, const Header& header) {
  if (t.values.empty()) {
    return {};
  }
  std::string out = format_header(header);
  for (std::size_t n = 0; n < t.values.size(); ++n) {
    out += std::to_string(n) + " ";
    out += t.bracketed
               ? std::to_string(t.lower[n]) + " " + std::to_string(t.upper[n])
               : std::to_string(t.values[n]);
    out += "\n";
  }
  return out;
}

std::string plot_log_data(const GrowthTable& t, const Header& header) {
  if (t.values.empty()) {
    return {};
  }
  std::string out = format_header(header);
  for (std::size_t n = 0; n < t.values.size(); ++n) {
    out += std::to_string(n) + " ";
    out += t.bracketed ? ln_text(t.lower[n]) + " " + ln_text(t.upper[n])
                       : ln_text(t.values[n]);
    out += "\n";
  }
  return out;
}

std::string plot_data(const SampledFunction& f, const SampledFunction& g,
                      std::int64_t C, const Header& header) {
  std::string out = format_header(header);
  for (std::size_t n = 1; n <= f.size(); ++n) {
    auto gv = g.at(static_cast<std::size_t>(C) * n);
    if (!gv) {
      break;
    }
    out += std::to_string(n) + " " + big_text(f.values[n - 1]) + " " +
           big_text(*gv) + "\n";
  }
  return out;
}

}  // namespace cgw
