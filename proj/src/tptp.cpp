#include "logiceval/tptp.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <regex>
#include <set>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace logiceval {

namespace {

bool lower_word(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string symbol(const std::string& s) {
  if (lower_word(s)) return s;
  std::string quoted = "'";
  for (char c : s) {
    if (c == '\'' || c == '\\') quoted += '\\';
    quoted += c;
  }
  quoted += "'";
  return quoted;
}

std::string tptp_term(const Term& t) {
  if (is_variable(t)) {
    std::string name = term_name(t);
    name[0] = char(std::toupper(static_cast<unsigned char>(name[0])));
    return name;
  }
  return symbol(term_name(t));
}

std::string tptp_atom(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Predicate: {
      std::string out = symbol(a.predicate) + "(";
      for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i) out += ",";
        out += tptp_term(a.args[i]);
      }
      return out + ")";
    }
    case AtomKind::RoleEq:
      return symbol("r_" + a.predicate) + "(" + tptp_term(a.args[0]) + "," +
             tptp_term(a.args[1]) + ")";
    case AtomKind::TermEq:
      return tptp_term(a.args[0]) + " = " + tptp_term(a.args[1]);
  }
  return {};
}

std::string tptp_formula(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Atomic:
      return tptp_atom(f.atom);
    case Formula::Kind::Neg:
      return "~(" + tptp_formula(f.children[0]) + ")";
    case Formula::Kind::Exists: {
      std::string out = "? [";
      for (std::size_t i = 0; i < f.bound.size(); ++i) {
        if (i) out += ",";
        std::string name = f.bound[i].name;
        name[0] = char(std::toupper(static_cast<unsigned char>(name[0])));
        out += name;
      }
      out += "] : ";
      const Formula& body = f.children[0];
      // Conjunctions already come back parenthesized.
      if (body.kind == Formula::Kind::Atomic || body.kind == Formula::Kind::Conj)
        out += tptp_formula(body);
      else
        out += "(" + tptp_formula(body) + ")";
      return out;
    }
    case Formula::Kind::Conj: {
      std::string out = "(";
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i) out += " & ";
        out += tptp_formula(f.children[i]);
      }
      return out + ")";
    }
  }
  return {};
}

void collect_roles(const Formula& f, std::set<std::string>& roles) {
  if (f.kind == Formula::Kind::Atomic) {
    if (f.atom.kind == AtomKind::RoleEq) roles.insert(f.atom.predicate);
    return;
  }
  for (const Formula& child : f.children) collect_roles(child, roles);
}

}  // namespace

std::string to_tptp(const Formula& first, const Formula& second,
                    TptpDirection direction) {
  const Formula& axiom = direction == TptpDirection::Forward ? first : second;
  const Formula& conjecture = direction == TptpDirection::Forward ? second : first;
  std::set<std::string> roles;
  collect_roles(axiom, roles);
  collect_roles(conjecture, roles);
  std::string out;
  out += "% Variables are uppercased (e1 -> E1). Other symbols are kept when they\n";
  out += "% match [a-z][a-zA-Z0-9_]* and single-quoted otherwise. A role equality\n";
  out += "% (subj(e1) = x2) renders as the atom r_subj(E1,X2), with one axiom per\n";
  out += "% role making it functional in its first argument.\n";
  int i = 0;
  for (const std::string& role : roles) {
    std::string r = symbol("r_" + role);
    out += "fof(f" + std::to_string(++i) + ", axiom, ! [E,X,Y] : ((" + r +
           "(E,X) & " + r + "(E,Y)) => X = Y)).\n";
  }
  out += "fof(a, axiom, " + tptp_formula(axiom) + ").\n";
  out += "fof(c, conjecture, " + tptp_formula(conjecture) + ").\n";
  return out;
}

namespace {

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    char name[] = "/tmp/logiceval-XXXXXX";
    int fd = mkstemp(name);
    if (fd < 0) return;
    path_ = name;
    FILE* f = fdopen(fd, "w");
    if (f) {
      std::fwrite(contents.data(), 1, contents.size(), f);
      std::fclose(f);
    } else {
      close(fd);
    }
  }
  ~TempFile() {
    if (!path_.empty()) std::remove(path_.c_str());
  }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

ProverOutcome external_prove(const std::string& problem, const ProverConfig& cfg) {
  if (cfg.command.empty()) return ProverOutcome::Error;
  TempFile file(problem);
  if (file.path().empty()) return ProverOutcome::Error;

  // A grace period on top of the prover's own budget; exit 124 is the
  // wrapper's kill signal.
  int wall = int(cfg.timeout_seconds) + 2;
  std::string cmd = "timeout " + std::to_string(wall) + "s " + cfg.command + " " +
                    file.path() + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return ProverOutcome::Error;

  std::string output;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    output.append(buf.data(), n);
  int status = pclose(pipe);

  static const std::regex szs("SZS status ([A-Za-z]+)");
  std::smatch m;
  if (std::regex_search(output, m, szs)) {
    const std::string& verdict = m[1];
    if (verdict == "Theorem" || verdict == "Unsatisfiable")
      return ProverOutcome::Theorem;
    if (verdict == "CounterSatisfiable" || verdict == "Satisfiable")
      return ProverOutcome::NotTheorem;
    if (verdict == "Timeout" || verdict == "ResourceOut" || verdict == "GaveUp")
      return ProverOutcome::Timeout;
    return ProverOutcome::Error;
  }
  if (WIFEXITED(status) && WEXITSTATUS(status) == 124) return ProverOutcome::Timeout;
  return ProverOutcome::Error;
}

}  // namespace logiceval
