#include <set>
#include <vector>

#include "rlw/syntax.hpp"

namespace rlw {

namespace {

// Dangling indices and free names of a subterm, used to pick binder names
// that neither capture a free variable nor shadow a referenced binder.
struct Scope {
  std::set<std::uint32_t> dangling;
  std::set<std::string> free;
};

void scan(const Term& t, std::uint32_t depth, Scope& sc) {
  switch (t.tag()) {
    case Tag::Var:
      if (t.var().bound) {
        if (t.var().index >= depth) sc.dangling.insert(t.var().index - depth);
      } else {
        sc.free.insert(t.var().name.str());
      }
      return;
    case Tag::Abs: scan(t.body(), depth + 1, sc); return;
    case Tag::App:
      scan(t.fn(), depth, sc);
      for (const auto& u : t.arg().elems()) scan(u, depth, sc);
      return;
  }
}

void scan(const Alg& m, std::uint32_t depth, Scope& sc) {
  switch (m.tag()) {
    case AlgTag::Var:
      if (m.var().bound) {
        if (m.var().index >= depth) sc.dangling.insert(m.var().index - depth);
      } else {
        sc.free.insert(m.var().name.str());
      }
      return;
    case AlgTag::Zero: return;
    case AlgTag::Abs: scan(m.body(), depth + 1, sc); return;
    case AlgTag::Scale: scan(m.body(), depth, sc); return;
    case AlgTag::App:
    case AlgTag::Sum:
      scan(m.lhs(), depth, sc);
      scan(m.rhs(), depth, sc);
      return;
  }
}

class Namer {
 public:
  template <class Body>
  std::string push(Symbol hint, const Body& body) {
    Scope sc;
    scan(body, 0, sc);
    std::string base = hint.empty() ? "x" : hint.str();
    for (unsigned k = 0;; ++k) {
      std::string cand = k ? base + std::to_string(k) : base;
      if (ok(cand, sc)) {
        names_.push_back(cand);
        return cand;
      }
    }
  }
  void pop() { names_.pop_back(); }

  std::string var(const Var& v) const {
    if (!v.bound) return v.name.str();
    if (v.index < names_.size()) return names_[names_.size() - 1 - v.index];
    return "_" + std::to_string(v.index - names_.size());
  }

 private:
  bool ok(const std::string& cand, const Scope& sc) const {
    if (sc.free.count(cand)) return false;
    // index j >= 1 inside the body names enclosing binder names_[size - j]
    for (std::uint32_t j : sc.dangling) {
      if (j == 0 || j > names_.size()) continue;
      if (names_[names_.size() - j] == cand) return false;
    }
    return true;
  }

  std::vector<std::string> names_;
};

void term_out(const Term& t, Namer& nm, std::string& out);

void bag_out(const Bag& b, Namer& nm, std::string& out) {
  out += '[';
  bool first = true;
  for (const auto& u : b.elems()) {
    if (!first) out += ", ";
    first = false;
    term_out(u, nm, out);
  }
  out += ']';
}

void term_out(const Term& t, Namer& nm, std::string& out) {
  switch (t.tag()) {
    case Tag::Var: out += nm.var(t.var()); return;
    case Tag::Abs:
      out += '\\';
      out += nm.push(t.hint(), t.body());
      out += ". ";
      term_out(t.body(), nm, out);
      nm.pop();
      return;
    case Tag::App:
      if (t.fn().tag() == Tag::Abs) {
        out += '(';
        term_out(t.fn(), nm, out);
        out += ')';
      } else {
        term_out(t.fn(), nm, out);
      }
      bag_out(t.arg(), nm, out);
      return;
  }
}

enum Prec { kSum = 0, kProd = 1, kApp = 2, kAtom = 3 };

void alg_out(const Alg& m, int prec, bool tail, Namer& nm, std::string& out) {
  bool paren = false;
  switch (m.tag()) {
    case AlgTag::Var: out += nm.var(m.var()); return;
    case AlgTag::Zero: out += '0'; return;
    case AlgTag::Sum: paren = prec > kSum; break;
    case AlgTag::Scale: paren = prec > kProd; break;
    case AlgTag::App: paren = prec > kApp; break;
    case AlgTag::Abs: paren = prec >= kApp || !tail; break;
  }
  if (paren) {
    out += '(';
    tail = true;
  }
  switch (m.tag()) {
    case AlgTag::Sum:
      alg_out(m.lhs(), kSum, false, nm, out);
      out += " + ";
      alg_out(m.rhs(), kProd, tail, nm, out);
      break;
    case AlgTag::Scale:
      out += m.coef().value().get_str();
      out += " * ";
      alg_out(m.body(), kProd, tail, nm, out);
      break;
    case AlgTag::App:
      alg_out(m.fn(), kApp, false, nm, out);
      out += ' ';
      alg_out(m.arg(), kAtom, tail, nm, out);
      break;
    case AlgTag::Abs:
      out += '\\';
      out += nm.push(m.hint(), m.body());
      out += ". ";
      alg_out(m.body(), kSum, true, nm, out);
      nm.pop();
      break;
    default: break;
  }
  if (paren) out += ')';
}

template <class E>
std::string sum_out(const FinSum<E>& s) {
  if (s.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : s) {
    if (!first) out += " + ";
    first = false;
    if (!(c == s.semiring().one())) {
      out += c.value().get_str();
      out += " * ";
    }
    out += render(e);
  }
  return out;
}

}  // namespace

std::string render(const Term& t) {
  Namer nm;
  std::string out;
  term_out(t, nm, out);
  return out;
}

std::string render(const Bag& b) {
  Namer nm;
  std::string out;
  bag_out(b, nm, out);
  return out;
}

std::string render(const ResExpr& e) {
  return std::visit([](const auto& x) { return render(x); }, e);
}

std::string render(const TermSum& s) { return sum_out(s); }
std::string render(const BagSum& s) { return sum_out(s); }

std::string render(const ResourceValue& v) {
  return std::visit([](const auto& x) { return render(x); }, v);
}

std::string render(const Alg& m) {
  Namer nm;
  std::string out;
  alg_out(m, kSum, true, nm, out);
  return out;
}

}  // namespace rlw
