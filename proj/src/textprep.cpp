#include "qnlp/textprep.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qnlp/errors.hpp"

namespace qnlp::textprep {

namespace {

const std::set<std::string> kDeterminers = {
    "the", "a", "an", "its", "their", "his", "her", "our", "this", "these",
    "those", "such", "both", "each", "every", "all", "some", "any", "no"};

const std::set<std::string> kPrepositions = {
    "in",     "on",     "at",     "by",     "of",      "from",  "for",
    "with",   "without", "during", "under",  "over",    "into",  "onto",
    "within", "between", "among",  "against", "amid",   "despite", "per",
    "after",  "before",  "until",  "through", "across", "around", "via"};

const std::set<std::string> kConjunctions = {
    "and", "but", "or", "nor", "while", "whereas", "because", "although",
    "though", "when", "since", "unless", "whether", "if", "as"};

const std::set<std::string> kDiscourseMarkers = {
    "however",   "therefore",    "moreover",  "furthermore", "meanwhile",
    "nevertheless", "nonetheless", "additionally", "consequently", "thus",
    "hence",     "overall",      "still",     "instead",     "accordingly"};

// Irregular or suffix-less verbs that appear in financial text and the
// bundled generators; regular forms are caught by the -ed/-ing/-s heuristics.
const std::set<std::string> kVerbList = {
    "rose",  "fell",  "met",   "said",  "saw",   "held",  "kept",  "made",
    "grew",  "sold",  "bought", "won",   "lost",  "paid",  "cut",   "beat",
    "led",   "ran",   "gave",  "took",  "came",  "went",  "left",  "began",
    "wait",  "watch", "report", "expect", "remain", "stay", "note",  "record"};

const std::set<std::string> kCorporateSuffixes = {
    "inc", "inc.", "corp",  "corp.", "ltd",         "ltd.", "plc",
    "oyj", "oy",   "ab",    "llc",   "corporation", "co.",  "gmbh"};

std::string lowercased(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(char(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

bool is_strippable(char c) {
  switch (c) {
    case '.': case ',': case ';': case ':': case '!': case '?':
    case '"': case '\'': case '(': case ')': case '[': case ']':
    case '{': case '}': case '`':
      return true;
    default:
      return false;
  }
}

bool is_tag(const std::string& label) {
  // Replacement tags are all-caps with underscores; surfaces are lowercased.
  if (label.empty()) return false;
  for (char c : label)
    if (!(std::isupper(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

bool matches_pattern_element(const std::string& element, const std::string& label) {
  if (element == "<num>") return is_numeric_token(label);
  if (element == "<url>") return is_url_token(label);
  return element == label;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool looks_like_participle(const std::string& label) {
  if (is_tag(label)) return false;
  return (ends_with(label, "ed") && label.size() > 3) ||
         (ends_with(label, "en") && label.size() > 4) ||
         label == "set" || label == "due" || label == "forecast";
}

bool looks_like_adverb(const std::string& label) {
  return ends_with(label, "ly") && label.size() > 3;
}

bool is_verb_like(const Token& t) {
  if (t.label == "UP_MOVE" || t.label == "DOWN_MOVE" || t.label == "COP")
    return true;
  if (is_tag(t.label)) return false;
  if (kVerbList.count(t.label)) return true;
  if (kDeterminers.count(t.label) || kPrepositions.count(t.label) ||
      kConjunctions.count(t.label))
    return false;
  if (ends_with(t.label, "ed") && t.label.size() > 3) return true;
  if (ends_with(t.label, "ing") && t.label.size() > 4) return true;
  return false;
}

}  // namespace

const char* to_string(RewriteLevel level) {
  switch (level) {
    case RewriteLevel::lexical: return "lexical";
    case RewriteLevel::phrase: return "phrase";
    case RewriteLevel::syntax: return "syntax";
    case RewriteLevel::none: return "none";
  }
  return "none";
}

RewriteLevel rewrite_level_from_string(const std::string& s) {
  if (s == "lexical") return RewriteLevel::lexical;
  if (s == "phrase" || s == "phrasal") return RewriteLevel::phrase;
  if (s == "syntax" || s == "syntactic") return RewriteLevel::syntax;
  throw ParseError("unknown rewrite level '" + s + "'");
}

bool is_numeric_token(const std::string& label) {
  if (label.empty() || is_tag(label)) return false;
  std::size_t i = 0;
  if (label[i] == '+' || label[i] == '-' || label[i] == '$') ++i;
  bool digit = false;
  for (; i < label.size(); ++i) {
    char c = label[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c == '.' || c == ',') {
      continue;
    } else if (c == '%' && i + 1 == label.size()) {
      continue;
    } else {
      return false;
    }
  }
  return digit;
}

bool is_url_token(const std::string& label) {
  return label.rfind("http://", 0) == 0 || label.rfind("https://", 0) == 0 ||
         label.rfind("www.", 0) == 0 || label.find("://") != std::string::npos;
}

bool is_discourse_marker(const std::string& label) {
  return kDiscourseMarkers.count(label) > 0;
}

bool is_capitalized(const std::string& surface) {
  return !surface.empty() && std::isupper(static_cast<unsigned char>(surface[0]));
}

PosClass classify_token(const Token& t) {
  const std::string& l = t.label;
  if (is_discourse_marker(l)) return PosClass::discourse;
  if (kConjunctions.count(l)) return PosClass::conjunction;
  if (kPrepositions.count(l)) return PosClass::preposition;
  if (l.rfind("LOC_", 0) == 0 || l.rfind("TIME_", 0) == 0 ||
      l.rfind("PREP_", 0) == 0 || l == "AGENT_BY" || l == "POSS_OF" ||
      l == "SRC_FROM" || l == "BEN_FOR" || l == "COM_WITH")
    return PosClass::preposition;
  if (l.rfind("REL_", 0) == 0) return PosClass::conjunction;
  if (is_verb_like(t)) return PosClass::verb;
  if (kDeterminers.count(l) || looks_like_adverb(l) || l.rfind("COMPAR_", 0) == 0)
    return PosClass::modifier;
  return PosClass::noun;
}

std::vector<Token> tokenize(const std::string& sentence) {
  std::vector<Token> out;
  std::istringstream ss(sentence);
  std::string word;
  while (ss >> word) {
    // URLs keep punctuation; everything else is stripped at both ends.
    std::string surface = word;
    if (!is_url_token(lowercased(word))) {
      std::size_t b = 0, e = word.size();
      while (b < e && is_strippable(word[b])) ++b;
      while (e > b && is_strippable(word[e - 1])) --e;
      surface = word.substr(b, e - b);
    }
    if (surface.empty()) continue;
    Token t;
    t.surface = surface;
    t.label = lowercased(surface);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Token> apply_rewrites(const std::vector<Token>& tokens,
                                  const std::vector<RewriteRule>& rules) {
  std::vector<Token> stream = tokens;
  for (RewriteLevel level :
       {RewriteLevel::lexical, RewriteLevel::phrase, RewriteLevel::syntax}) {
    std::vector<const RewriteRule*> active;
    for (const auto& r : rules)
      if (r.level == level) active.push_back(&r);
    if (active.empty()) continue;

    std::vector<Token> next;
    std::size_t i = 0;
    while (i < stream.size()) {
      // Leftmost-longest: find the longest pattern matching at i. Two rules
      // of the same level matching the same span is a bundle defect.
      const RewriteRule* best = nullptr;
      std::size_t best_len = 0;
      for (const RewriteRule* r : active) {
        std::size_t n = r->pattern.size();
        if (n == 0 || i + n > stream.size()) continue;
        bool ok = true;
        for (std::size_t k = 0; k < n; ++k)
          if (!matches_pattern_element(r->pattern[k], stream[i + k].label)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        if (n > best_len) {
          best = r;
          best_len = n;
        } else if (n == best_len && best != nullptr && r->id != best->id) {
          throw OverlappingRules("rules '" + best->id + "' and '" + r->id +
                                 "' both match a " + std::to_string(n) +
                                 "-token span at position " + std::to_string(i));
        }
      }
      if (best == nullptr) {
        next.push_back(stream[i]);
        ++i;
        continue;
      }
      std::string joined;
      for (std::size_t k = 0; k < best_len; ++k) {
        if (k) joined += ' ';
        joined += stream[i + k].surface;
      }
      for (const std::string& tag : best->replacement) {
        Token t;
        t.surface = joined;
        t.label = tag;
        t.level_applied = level;
        next.push_back(std::move(t));
      }
      i += best_len;
    }
    stream = std::move(next);
  }
  return stream;
}

namespace {

// A grouping atom: a run of tokens that must stay inside one chunk, possibly
// with a directional attachment to a neighbor chunk.
struct Atom {
  int begin = 0;
  int end = 0;  // exclusive
  bool attach_left = false;
  bool attach_right = false;
  std::optional<std::string> rule;
};

std::vector<Atom> build_atoms(const std::vector<Token>& toks) {
  std::vector<Atom> atoms;
  const int n = int(toks.size());
  int i = 0;
  while (i < n) {
    Atom a;
    a.begin = i;

    const Token& t = toks[i];

    // Sentence-initial discourse markers merge into the following clause.
    if (i == 0 && is_discourse_marker(t.label)) {
      a.end = i + 1;
      a.attach_right = true;
      a.rule = "discourse-marker";
      atoms.push_back(a);
      i = a.end;
      continue;
    }

    // URL collapse: the token is already a single word; keep it atomic.
    if (is_url_token(t.label) || t.label == "URL") {
      a.end = i + 1;
      a.rule = "url";
      atoms.push_back(a);
      i = a.end;
      continue;
    }

    // Fixed verb expressions: copula + participle (+ "to" + verb).
    if (t.label == "COP" && i + 1 < n && looks_like_participle(toks[i + 1].label)) {
      int e = i + 2;
      if (e < n && toks[e].label == "to") {
        ++e;
        if (e < n && is_verb_like(toks[e])) ++e;
      }
      a.end = e;
      a.rule = "fixed-expression";
      atoms.push_back(a);
      i = a.end;
      continue;
    }

    // "as + (adverb) + past participle" attaches to the following clause.
    if (t.label == "as" && i + 1 < n) {
      int e = -1;
      if (looks_like_participle(toks[i + 1].label)) e = i + 2;
      else if (i + 2 < n && looks_like_adverb(toks[i + 1].label) &&
               looks_like_participle(toks[i + 2].label))
        e = i + 3;
      if (e > 0) {
        a.end = e;
        a.attach_right = true;
        a.rule = "as-participle";
        atoms.push_back(a);
        i = a.end;
        continue;
      }
    }

    // Infinitival "to + verb" attaches to its governing verb on the left.
    if (t.label == "to" && i + 1 < n && is_verb_like(toks[i + 1])) {
      a.end = i + 2;
      a.attach_left = true;
      a.rule = "to-verb";
      atoms.push_back(a);
      i = a.end;
      continue;
    }

    // Proper-noun runs (two or more capitalized tokens, or a name followed by
    // a corporate suffix) stay together.
    if (is_capitalized(t.surface) && !is_tag(t.label)) {
      int e = i + 1;
      while (e < n && !is_tag(toks[e].label) &&
             (is_capitalized(toks[e].surface) ||
              kCorporateSuffixes.count(toks[e].label)))
        ++e;
      if (e - i >= 2 && (i > 0 || e - i >= 2)) {
        a.end = e;
        a.rule = "proper-noun";
        atoms.push_back(a);
        i = a.end;
        continue;
      }
    }

    // Leftover multiword prepositions (when running with no rule bundle).
    if (t.label == "due" && i + 1 < n && toks[i + 1].label == "to") {
      a.end = i + 2;
      a.rule = "compound-preposition";
      atoms.push_back(a);
      i = a.end;
      continue;
    }

    a.end = i + 1;
    atoms.push_back(a);
    i = a.end;
  }
  return atoms;
}

bool atom_is_verb_like(const std::vector<Token>& toks, const Atom& a) {
  for (int k = a.begin; k < a.end; ++k)
    if (is_verb_like(toks[k])) return true;
  return false;
}

bool starts_new_chunk(const std::vector<Token>& toks,
                      const std::vector<Atom>& group, const Atom& incoming) {
  if (group.empty()) return false;
  if (incoming.attach_left) return false;
  if (group.back().attach_right) return false;

  PosClass head = classify_token(toks[incoming.begin]);
  if (head == PosClass::preposition || head == PosClass::conjunction)
    return true;
  if (incoming.rule == "compound-preposition") return true;

  // A second finite verb opens a new clause chunk.
  if (atom_is_verb_like(toks, incoming)) {
    for (const Atom& a : group)
      if (atom_is_verb_like(toks, a)) return true;
  }
  return false;
}

}  // namespace

std::vector<Chunk> chunk_sentence(const std::vector<Token>& tokens) {
  if (tokens.empty()) throw EmptySentence("no tokens");

  std::vector<Atom> atoms = build_atoms(tokens);

  // Group atoms into raw chunks.
  std::vector<std::vector<Atom>> groups;
  std::vector<Atom> current;
  for (const Atom& a : atoms) {
    if (starts_new_chunk(tokens, current, a)) {
      groups.push_back(std::move(current));
      current.clear();
    }
    current.push_back(a);
  }
  if (!current.empty()) groups.push_back(std::move(current));

  // Emit chunks, subdividing anything longer than five tokens greedily.
  std::vector<Chunk> chunks;
  for (const auto& g : groups) {
    int begin = g.front().begin;
    int end = g.back().end;
    std::optional<std::string> rule;
    for (const Atom& a : g)
      if (a.rule && !rule) rule = a.rule;
    while (begin < end) {
      int take = std::min(kMaxChunkTokens, end - begin);
      Chunk c;
      c.start = begin;
      c.end = begin + take;
      c.boundary_rule = rule;
      for (int k = begin; k < begin + take; ++k) c.tokens.push_back(tokens[k]);
      chunks.push_back(std::move(c));
      begin += take;
      rule.reset();
    }
  }
  return chunks;
}

std::vector<RewriteRule> load_rule_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open rule bundle '" + path + "'");
  std::vector<RewriteRule> rules;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const std::exception& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    RewriteRule r;
    r.id = j.at("id").get<std::string>();
    r.level = rewrite_level_from_string(j.at("level").get<std::string>());
    r.pattern = j.at("pattern").get<std::vector<std::string>>();
    r.replacement = j.at("replacement").get<std::vector<std::string>>();
    if (r.pattern.empty() || r.replacement.empty())
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": empty pattern or replacement");
    rules.push_back(std::move(r));
  }
  return rules;
}

void check_rule_collisions(const std::vector<RewriteRule>& rules,
                           const std::vector<std::string>& corpus) {
  for (const std::string& sentence : corpus)
    apply_rewrites(tokenize(sentence), rules);  // throws OverlappingRules
}

}  // namespace qnlp::textprep
