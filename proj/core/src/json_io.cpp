#include "qhaar/json_io.hpp"

namespace qhaar {

Json to_json(const Partition& p) { return Json(p.parts); }

Partition partition_from_json(const Json& j) {
  return Partition(j.get<std::vector<int>>());
}

Json to_json(const StandardTableau& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back(r);
  return rows;
}

Json to_json(const SMatrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

SMatrix smatrix_from_json(const Json& j) {
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  SMatrix m(rows, cols);
  const Json& entries = j.at("entries");
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c)
      m.at(i, c) = Scalar::parse(entries.at(i).at(c).get<std::string>());
  return m;
}

Json to_json(const HeckeSymmetry& sym) {
  Json r = Json::array();
  for (int i = 0; i < sym.R.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < sym.R.cols(); ++j) row.push_back(sym.R.at(i, j).to_string());
    r.push_back(std::move(row));
  }
  return Json{{"d", sym.d},
              {"parities", sym.parities},
              {"R", std::move(r)},
              {"birank", Json::array({sym.birank_r, sym.birank_s})}};
}

HeckeSymmetry symmetry_from_json(const Json& j) {
  int d = j.at("d").get<int>();
  ParityVector par = j.at("parities").get<ParityVector>();
  if (static_cast<int>(par.size()) != d) throw std::invalid_argument("parities length != d");
  const Json& rj = j.at("R");
  SMatrix r(d * d, d * d);
  for (int i = 0; i < d * d; ++i)
    for (int c = 0; c < d * d; ++c)
      r.at(i, c) = Scalar::parse(rj.at(i).at(c).get<std::string>());
  int br = j.at("birank").at(0).get<int>();
  int bs = j.at("birank").at(1).get<int>();
  return make_symmetry(d, std::move(par), std::move(r), br, bs, "custom");
}

Json to_json(const HeckeElement& x) {
  Json out = Json::array();
  for (const auto& [w, c] : x.coords())
    out.push_back(Json{{"perm", w.img}, {"coef", c.to_string()}});
  return out;
}

HeckeElement hecke_element_from_json(const Json& j) {
  if (j.empty()) throw std::invalid_argument("cannot infer degree of empty element");
  int n = static_cast<int>(j.at(0).at("perm").size());
  HeckeElement x(n);
  for (const auto& term : j)
    x.add_term(Permutation(term.at("perm").get<std::vector<int>>()),
               Scalar::parse(term.at("coef").get<std::string>()));
  return x;
}

Json to_json(const Monomial& m) {
  return Json{{"I", m.I}, {"J", m.J}, {"K", m.K}, {"L", m.L}};
}

Monomial monomial_from_json(const Json& j) {
  Monomial m;
  m.I = j.at("I").get<MultiIndex>();
  m.J = j.at("J").get<MultiIndex>();
  m.K = j.at("K").get<MultiIndex>();
  m.L = j.at("L").get<MultiIndex>();
  return m;
}

Json to_json(const FreeElement& x) {
  Json out = Json::array();
  for (const auto& [w, c] : x.terms()) {
    Json word = Json::array();
    for (const auto& g : w)
      word.push_back(Json::array({g.is_t ? "t" : "z", g.upper, g.lower}));
    out.push_back(Json{{"word", std::move(word)}, {"coef", c.to_string()}});
  }
  return out;
}

FreeElement free_element_from_json(const Json& j) {
  FreeElement x;
  for (const auto& term : j) {
    FreeWord w;
    for (const auto& g : term.at("word")) {
      std::string kind = g.at(0).get<std::string>();
      if (kind != "z" && kind != "t") throw std::invalid_argument("generator kind must be z or t");
      w.push_back(GenSymbol{kind == "t", g.at(1).get<int>(), g.at(2).get<int>()});
    }
    x.add_term(std::move(w), Scalar::parse(term.at("coef").get<std::string>()));
  }
  return x;
}

Json to_json(const KPoint& pt) {
  Json diag = Json::array();
  for (const auto& s : pt.diag) diag.push_back(s.to_string());
  return Json{{"diag", std::move(diag)}};
}

KPoint kpoint_from_json(const Json& j) {
  KPoint pt;
  for (const auto& s : j.at("diag")) pt.diag.push_back(Scalar::parse(s.get<std::string>()));
  return pt;
}

}  // namespace qhaar
