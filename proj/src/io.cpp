#include "hyperconv/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hyperconv {

using nlohmann::json;

namespace {

Rational read_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) throw InputError(where + ": expected a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what());
  }
}

RationalVector read_vector(const json& v, std::size_t len, const std::string& where) {
  if (!v.is_array() || v.size() != len)
    throw InputError(where + ": expected an array of " + std::to_string(len) + " entries");
  RationalVector out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = read_rational(v[i], where + "[" + std::to_string(i) + "]");
  return out;
}

json write_vector(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

PolarizedArrangement ArrangementDoc::polarization() const {
  if (!xi) throw InputError("arrangement has no polarization xi");
  return PolarizedArrangement(base, *xi);
}

ArrangementDoc parse_arrangement(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON at " + line_col(text, e.byte) + " (byte " + std::to_string(e.byte) + ")");
  }
  if (!j.is_object()) throw InputError("arrangement must be a JSON object");
  for (const char* key : {"n", "k", "A", "w"})
    if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  if (!j["n"].is_number_unsigned() || !j["k"].is_number_unsigned())
    throw InputError("n and k must be non-negative integers");
  auto n = j["n"].get<std::size_t>(), k = j["k"].get<std::size_t>();
  const auto& A = j["A"];
  if (!A.is_array() || A.size() != n) throw InputError("A: expected " + std::to_string(n) + " rows");
  RationalMatrix M(n, k);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = read_vector(A[r], k, "A[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < k; ++c) M(r, c) = row[c];
  }
  auto w = read_vector(j["w"], n, "w");
  std::optional<RationalVector> xi;
  std::optional<Rational> c;
  if (j.contains("xi") && !j["xi"].is_null()) xi = read_vector(j["xi"], k, "xi");
  if (j.contains("c") && !j["c"].is_null()) c = read_rational(j["c"], "c");
  try {
    ArrangementDoc doc{Arrangement(M, w), xi, c};
    if (xi) doc.polarization();
    return doc;
  } catch (const ArrangementError& e) {
    throw InputError(e.what());
  }
}

ArrangementDoc load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_arrangement(ss.str());
}

std::string dump_arrangement(const ArrangementDoc& doc) {
  json j = json::object();
  const auto& V = doc.base;
  j["n"] = V.n();
  j["k"] = V.k();
  json A = json::array();
  for (std::size_t r = 0; r < V.n(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < V.k(); ++c) row.push_back(to_string(V.A()(r, c)));
    A.push_back(row);
  }
  j["A"] = A;
  j["w"] = write_vector(V.w());
  if (doc.xi) j["xi"] = write_vector(*doc.xi);
  if (doc.c) j["c"] = to_string(*doc.c);
  return j.dump(2) + "\n";
}

std::string dump_arrangement(const PolarizedArrangement& V) { return dump_arrangement({V.base(), V.x(), {}}); }

std::string dump_rank_table(const RankTable& t) {
  json j = json::object();
  j["algebra"] = t.algebra;
  j["window"] = t.window;
  json rows = json::array();
  for (const auto& e : t.entries) rows.push_back({{"src", e.src}, {"tgt", e.tgt}, {"degree", e.degree}, {"rank", e.rank}});
  j["entries"] = rows;
  return j.dump(2) + "\n";
}

}  // namespace hyperconv
