#include <cctype>
#include <set>
#include <sstream>

#include "mvmodal/lukdecide.hpp"

namespace mvmodal {

namespace {

std::string smt_rational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  std::string core;
  if (den == 1)
    core = boost::multiprecision::abs(num).str();
  else
    core = "(/ " + boost::multiprecision::abs(num).str() + " " + den.str() + ")";
  if (num < 0) return "(- " + core + ")";
  return core;
}

std::string term_of(const MilpEncoding& enc, const LinearConstraint& row) {
  if (row.terms.empty()) return "0";
  std::ostringstream os;
  const bool sum = row.terms.size() > 1;
  if (sum) os << "(+";
  for (const auto& t : row.terms) {
    std::string v = enc.var_names[t.var];
    if (enc.is_binary[t.var]) v = "(ite " + v + " 1 0)";
    std::string piece = (t.coeff == 1) ? v : "(* " + smt_rational(t.coeff) + " " + v + ")";
    if (sum)
      os << " " << piece;
    else
      os << piece;
  }
  if (sum) os << ")";
  return os.str();
}

}  // namespace

std::string emit_smtlib(const MilpEncoding& enc) {
  std::ostringstream os;
  os << "(set-logic QF_LRA)\n";
  os << "(set-info :source |mvmodal witnessed-unfolding encoding; "
     << "sat = a countermodel valuation exists|)\n";
  for (int i = 0; i < enc.num_vars; ++i) {
    if (enc.is_binary[i])
      os << "(declare-fun " << enc.var_names[i] << " () Bool)\n";
    else
      os << "(declare-fun " << enc.var_names[i] << " () Real)\n"
         << "(assert (<= 0 " << enc.var_names[i] << "))\n";
  }
  for (const auto& row : enc.rows) {
    const char* rel = row.rel == Rel::Le ? "<=" : (row.rel == Rel::Ge ? ">=" : "=");
    os << "(assert (" << rel << " " << term_of(enc, row) << " " << smt_rational(row.rhs)
       << "))\n";
  }
  os << "(declare-fun phi () Real)\n";
  if (enc.conclusion_is_const)
    os << "(assert (= phi " << smt_rational(enc.conclusion_const) << "))\n";
  else
    os << "(assert (= phi " << enc.var_names[enc.conclusion_var] << "))\n";
  os << "(assert (< phi 1))\n";
  os << "(check-sat)\n";
  return os.str();
}

namespace {

bool symbol_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
         c == '/' || c == '<' || c == '=' || c == '>' || c == '+' || c == '*' || c == ':';
}

}  // namespace

bool smtlib_well_formed(const std::string& text, std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  static const std::set<std::string> commands = {"set-logic", "set-info", "declare-fun",
                                                 "assert", "check-sat", "exit", "get-model"};
  int depth = 0;
  std::size_t i = 0;
  const std::size_t n = text.size();
  std::string head;
  bool reading_head = false;
  std::set<std::string> declared;
  std::vector<std::string> pending_decl;  // symbols of the current declare-fun
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      ++depth;
      if (depth == 1) {
        reading_head = true;
        head.clear();
        pending_decl.clear();
      }
      ++i;
      continue;
    }
    if (c == ')') {
      if (depth == 0) return fail("unbalanced ')' at byte " + std::to_string(i));
      --depth;
      if (depth == 0 && head == "declare-fun" && !pending_decl.empty())
        declared.insert(pending_decl.front());
      ++i;
      continue;
    }
    if (c == '|') {  // quoted symbol
      std::size_t j = text.find('|', i + 1);
      if (j == std::string::npos) return fail("unterminated quoted symbol");
      i = j + 1;
      continue;
    }
    if (depth == 0) return fail("token outside any command at byte " + std::to_string(i));
    if (!symbol_char(c) && c != '-')
      return fail(std::string("unexpected character '") + c + "' at byte " + std::to_string(i));
    std::size_t j = i;
    while (j < n && symbol_char(text[j])) ++j;
    const std::string tok = text.substr(i, j - i);
    if (reading_head) {
      if (!commands.count(tok)) return fail("unknown command '" + tok + "'");
      head = tok;
      reading_head = false;
    } else if (head == "declare-fun" && depth == 1 && pending_decl.empty()) {
      pending_decl.push_back(tok);
    } else if (head == "assert" && !std::isdigit(static_cast<unsigned char>(tok[0]))) {
      static const std::set<std::string> builtins = {"+", "-", "*", "/", "<", "<=", "=",
                                                     ">=", ">", "ite", "and", "or", "not",
                                                     "true", "false"};
      if (!builtins.count(tok) && !declared.count(tok))
        return fail("use of undeclared symbol '" + tok + "'");
    }
    i = j;
  }
  if (depth != 0) return fail("unbalanced '(' at end of input");
  return true;
}

}  // namespace mvmodal
