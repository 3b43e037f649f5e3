#include "tautilt/textio.hpp"

#include <map>
#include <sstream>

namespace tautilt {

namespace {

std::string rat_to_text(const Rat& c) {
  std::ostringstream os;
  os << numerator(c);
  if (denominator(c) != 1) os << "/" << denominator(c);
  return os.str();
}

Rat rat_from_text(const std::string& s) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw input_error("zero denominator in coefficient '" + s + "'");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw input_error("cannot parse coefficient '" + s + "'");
  }
}

}  // namespace

std::string emit_quiver_text(const BoundQuiver& bq) {
  std::ostringstream os;
  os << "vertices " << bq.q.n << "\n";
  for (size_t a = 0; a < bq.q.arrows.size(); ++a)
    os << "arrow " << bq.q.arrow_ids[a] << " " << bq.q.arrows[a].src + 1 << " "
       << bq.q.arrows[a].dst + 1 << "\n";
  for (const Relation& r : bq.rels) {
    os << "rel ";
    for (size_t t = 0; t < r.terms.size(); ++t) {
      Rat c = r.terms[t].first;
      if (t == 0) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      os << rat_to_text(c < 0 ? Rat(-c) : c) << "*";
      const Path& p = r.terms[t].second;
      for (size_t k = 0; k < p.size(); ++k) {
        if (k) os << ".";
        os << bq.q.arrow_ids[p[k]];
      }
    }
    os << "\n";
  }
  return os.str();
}

BoundQuiver parse_quiver_text(const std::string& text) {
  BoundQuiver bq;
  std::map<long long, int> arrow_index;  // display id -> internal index
  bool saw_vertices = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;  // blank line
    if (kw == "#") continue;    // comment
    auto fail = [&](const std::string& why) -> void {
      throw input_error("quiver text line " + std::to_string(lineno) + ": " + why);
    };
    if (kw == "vertices") {
      int n;
      if (!(ls >> n) || n < 1) fail("expected 'vertices n' with n >= 1");
      bq.q.n = n;
      saw_vertices = true;
    } else if (kw == "arrow") {
      if (!saw_vertices) fail("'arrow' before 'vertices'");
      long long id;
      int src, dst;
      if (!(ls >> id >> src >> dst)) fail("expected 'arrow id src dst'");
      if (id < 1) fail("arrow ids must be positive");
      if (arrow_index.count(id)) fail("duplicate arrow id " + std::to_string(id));
      if (src < 1 || src > bq.q.n || dst < 1 || dst > bq.q.n)
        fail("arrow endpoint out of range");
      arrow_index[id] = static_cast<int>(bq.q.arrows.size());
      bq.q.arrows.push_back({src - 1, dst - 1});
      bq.q.arrow_ids.push_back(id);
    } else if (kw == "rel") {
      if (!saw_vertices) fail("'rel' before 'vertices'");
      Relation rel;
      // tokens: [-] term ( +|- term )* ; term = coeff*path
      std::string tok;
      int sign = +1;
      bool expect_term = true;
      // allow leading '-' glued to the first term or standalone
      while (ls >> tok) {
        if (tok == "+" || tok == "-") {
          if (expect_term) fail("misplaced sign");
          sign = (tok == "-") ? -1 : +1;
          expect_term = true;
          continue;
        }
        if (!expect_term) fail("missing +/- between terms");
        if (!tok.empty() && tok[0] == '-') {
          sign = -sign;
          tok = tok.substr(1);
        }
        size_t star = tok.find('*');
        if (star == std::string::npos) fail("term '" + tok + "' lacks coeff*path");
        Rat c = rat_from_text(tok.substr(0, star));
        if (c == 0) fail("zero coefficient");
        if (sign < 0) c = -c;
        Path p;
        std::stringstream ps(tok.substr(star + 1));
        std::string step;
        while (std::getline(ps, step, '.')) {
          if (step.empty()) fail("empty arrow id in path");
          long long id;
          try {
            id = std::stoll(step);
          } catch (const std::logic_error&) {
            fail("cannot parse arrow id '" + step + "'");
            id = 0;
          }
          auto it = arrow_index.find(id);
          if (it == arrow_index.end()) fail("unknown arrow id " + step);
          p.push_back(it->second);
        }
        if (p.empty()) fail("empty path");
        rel.terms.emplace_back(c, p);
        sign = +1;
        expect_term = false;
      }
      if (rel.terms.empty()) fail("empty relation");
      if (expect_term) fail("dangling sign");
      bq.rels.push_back(rel);
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  if (!saw_vertices) throw input_error("quiver text has no 'vertices' line");
  bq.validate();
  return bq;
}

}  // namespace tautilt
