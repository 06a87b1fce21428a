#include "torcoh/formats.hpp"

#include <limits>
#include <sstream>

namespace torcoh {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object()) fail(Errc::parse, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    fail(Errc::parse, std::string("missing field \"") + key + "\"");
  return *it;
}

long need_long(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_integer())
    fail(Errc::parse, std::string("field \"") + key + "\" must be an integer");
  return v.get<long>();
}

std::string need_str(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_string())
    fail(Errc::parse, std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

const Json& need_array(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_array())
    fail(Errc::parse, std::string("field \"") + key + "\" must be an array");
  return v;
}

void check_envelope(const Json& j, const char* format) {
  if (need_str(j, "format") != format)
    fail(Errc::parse, std::string("expected format \"") + format + "\"");
  if (need_long(j, "version") != 1)
    fail(Errc::parse, "unsupported document version");
}

Json rat_to_json(const Rat& r) {
  return Json{{"num", to_string(Int(r.get_num()))},
              {"den", to_string(Int(r.get_den()))}};
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(Errc::parse, e.what());
  }
}

Json matrix_to_json(const SparseIntMatrix& a) {
  Json entries = Json::array();
  for (int r = 0; r < a.rows(); ++r)
    for (const auto& [c, v] : a.row(r))
      entries.push_back(Json::array({r, c, to_string(v)}));
  return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", entries}};
}

SparseIntMatrix matrix_from_json(const Json& j) {
  const long rows = need_long(j, "rows");
  const long cols = need_long(j, "cols");
  if (rows < 0 || cols < 0) fail(Errc::parse, "negative matrix dimension");
  SparseIntMatrix a(static_cast<int>(rows), static_cast<int>(cols));
  for (const Json& e : need_array(j, "entries")) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_string())
      fail(Errc::parse, "matrix entry must be [row, col, \"value\"]");
    const long r = e[0].get<long>();
    const long c = e[1].get<long>();
    if (r < 0 || r >= rows || c < 0 || c >= cols)
      fail(Errc::parse, "matrix entry out of range");
    a.set(static_cast<int>(r), static_cast<int>(c),
          parse_int(e[2].get<std::string>()));
  }
  return a;
}

Json complex_to_json(const GroupRingComplex& gc) {
  Json boundaries = Json::array();
  for (const auto& bq : gc.boundaries) {
    Json rows = Json::array();
    for (const auto& row : bq) {
      Json cols = Json::array();
      for (const auto& entry : row) {
        Json terms = Json::array();
        for (const auto& [word, coeff] : entry.terms)
          terms.push_back(Json::array({Json(word), to_string(coeff)}));
        cols.push_back(terms);
      }
      rows.push_back(cols);
    }
    boundaries.push_back(rows);
  }
  Json j{{"format", "torcoh-complex"},
         {"version", 1},
         {"generators", gc.num_generators},
         {"basis_sizes", gc.basis_sizes},
         {"boundaries", boundaries}};
  if (!gc.generator_names.empty()) j["generator_names"] = gc.generator_names;
  return j;
}

GroupRingComplex complex_from_json(const Json& j) {
  check_envelope(j, "torcoh-complex");
  GroupRingComplex gc;
  gc.num_generators = static_cast<int>(need_long(j, "generators"));
  if (j.contains("generator_names")) {
    for (const Json& n : need_array(j, "generator_names")) {
      if (!n.is_string()) fail(Errc::parse, "generator names must be strings");
      gc.generator_names.push_back(n.get<std::string>());
    }
  }
  for (const Json& v : need_array(j, "basis_sizes")) {
    if (!v.is_number_integer()) fail(Errc::parse, "basis sizes must be integers");
    gc.basis_sizes.push_back(v.get<int>());
  }
  for (const Json& bq : need_array(j, "boundaries")) {
    if (!bq.is_array()) fail(Errc::parse, "boundary must be an array of rows");
    std::vector<std::vector<GroupRingElement>> rows;
    for (const Json& rowj : bq) {
      if (!rowj.is_array()) fail(Errc::parse, "boundary row must be an array");
      std::vector<GroupRingElement> row;
      for (const Json& entryj : rowj) {
        if (!entryj.is_array())
          fail(Errc::parse, "boundary entry must be an array of terms");
        GroupRingElement entry;
        for (const Json& termj : entryj) {
          if (!termj.is_array() || termj.size() != 2 || !termj[0].is_array() ||
              !termj[1].is_string())
            fail(Errc::parse, "term must be [[letters...], \"coeff\"]");
          Word w;
          for (const Json& letter : termj[0]) {
            if (!letter.is_number_integer())
              fail(Errc::parse, "word letters must be integers");
            w.push_back(letter.get<int>());
          }
          entry.terms.emplace_back(std::move(w),
                                   parse_int(termj[1].get<std::string>()));
        }
        entry.normalize();
        row.push_back(std::move(entry));
      }
      rows.push_back(std::move(row));
    }
    gc.boundaries.push_back(std::move(rows));
  }
  gc.validate();
  return gc;
}

Json module_to_json(const CoeffModule& m) {
  Json action = Json::array();
  for (const auto& a : m.action) action.push_back(matrix_to_json(a));
  return Json{{"format", "torcoh-module"},
              {"version", 1},
              {"rank", m.rank},
              {"action", action}};
}

CoeffModule module_from_json(const Json& j) {
  check_envelope(j, "torcoh-module");
  CoeffModule m;
  m.rank = static_cast<int>(need_long(j, "rank"));
  if (m.rank < 0) fail(Errc::parse, "module rank must be >= 0");
  for (const Json& a : need_array(j, "action")) {
    SparseIntMatrix mat = matrix_from_json(a);
    if (mat.rows() != m.rank || mat.cols() != m.rank)
      fail(Errc::parse, "action matrix shape does not match module rank");
    m.action.push_back(std::move(mat));
  }
  return m;
}

Json cochain_to_json(const CochainComplex& cc) {
  Json maps = Json::array();
  for (const auto& m : cc.maps) maps.push_back(matrix_to_json(m));
  return Json{{"format", "torcoh-cochain"},
              {"version", 1},
              {"lengths", cc.lengths},
              {"maps", maps}};
}

CochainComplex cochain_from_json(const Json& j) {
  check_envelope(j, "torcoh-cochain");
  CochainComplex cc;
  for (const Json& v : need_array(j, "lengths")) {
    if (!v.is_number_integer()) fail(Errc::parse, "lengths must be integers");
    cc.lengths.push_back(v.get<int>());
  }
  for (const Json& m : need_array(j, "maps"))
    cc.maps.push_back(matrix_from_json(m));
  cc.validate(false);
  return cc;
}

Json cohomology_to_json(const CohomologyResult& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees) {
    Json divisors = Json::array();
    for (const auto& e : d.elementary_divisors) divisors.push_back(to_string(e));
    degrees.push_back(Json{{"degree", d.degree},
                           {"free_rank", d.free_rank},
                           {"divisors", divisors},
                           {"torsion_order", to_string(d.torsion_order)}});
  }
  return Json{{"all_orders_finite", r.all_orders_finite()},
              {"degrees", degrees}};
}

Json torsion_to_json(const TorsionValue& t) {
  Json j{{"t_squared", rat_to_json(t.t_squared)},
         {"t_exact", t.t_exact},
         {"log_t", t.log_t_str()}};
  if (t.t_exact) j["t_value"] = rat_to_json(t.t_value);
  return j;
}

Json verify_to_json(const VerifyReport& r) {
  return Json{{"cohomology", cohomology_to_json(r.cohomology)},
              {"alt_product", rat_to_json(r.alt_product)},
              {"torsion", torsion_to_json(r.torsion)},
              {"equal", r.equal}};
}

GrowthSeries series_from_csv(const std::string& text) {
  GrowthSeries s;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      fail(Errc::parse,
           "line " + std::to_string(lineno) + ": expected exactly two fields");
    auto trim = [](std::string f) {
      const auto b = f.find_first_not_of(" \t");
      const auto e = f.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
    };
    const std::string mf = trim(line.substr(0, comma));
    const std::string vf = trim(line.substr(comma + 1));
    if (header_allowed && mf == "m") {  // column header
      header_allowed = false;
      continue;
    }
    header_allowed = false;
    try {
      const Int m = parse_int(mf);
      if (m < std::numeric_limits<long>::min() || m > std::numeric_limits<long>::max())
        fail(Errc::parse, "position out of range");
      s.points.emplace_back(static_cast<long>(m.get_si()), Real::parse(vf));
    } catch (const Error& e) {
      fail(Errc::parse, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  s.validate();
  return s;
}

std::string series_to_csv(const GrowthSeries& s) {
  std::string out = "m,value\n";
  for (const auto& [m, v] : s.points)
    out += std::to_string(m) + "," + v.str() + "\n";
  return out;
}

}  // namespace torcoh
