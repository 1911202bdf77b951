#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qnlp::textprep {

enum class RewriteLevel { lexical, phrase, syntax, none };

const char* to_string(RewriteLevel level);
RewriteLevel rewrite_level_from_string(const std::string& s);

/// One word of a sentence after tokenization. `label` starts as the
/// normalized (lowercased, punctuation-stripped) surface and is replaced by a
/// tag when a rewrite rule fires; `level_applied` records which level did it.
struct Token {
  std::string surface;  // original text, case preserved; merged spans keep spaces
  std::string label;
  RewriteLevel level_applied = RewriteLevel::none;
};

/// A rewrite rule: a literal token-sequence pattern (matched against current
/// labels) replaced by one or more tags. Pattern elements may be the class
/// wildcards "<num>" and "<url>".
struct RewriteRule {
  std::string id;
  RewriteLevel level = RewriteLevel::lexical;
  std::vector<std::string> pattern;
  std::vector<std::string> replacement;
};

/// Contiguous span of tokens, at most five long. `boundary_rule` names the
/// grouping rule that shaped the chunk, when one applied.
struct Chunk {
  std::vector<Token> tokens;
  int start = 0;  // word indices into the rewritten token stream
  int end = 0;    // exclusive
  std::optional<std::string> boundary_rule;
};

constexpr int kMaxChunkTokens = 5;

bool is_numeric_token(const std::string& label);
bool is_url_token(const std::string& label);

/// Splits on whitespace, strips surrounding punctuation, drops empty tokens.
std::vector<Token> tokenize(const std::string& sentence);

/// Applies the rule bundle in one pass per level (lexical -> phrase ->
/// syntax), leftmost-longest within a level. Idempotent: tags never re-match.
/// Throws OverlappingRules when two same-level rules match the same span.
std::vector<Token> apply_rewrites(const std::vector<Token>& tokens,
                                  const std::vector<RewriteRule>& rules);

/// Splits a rewritten token stream into order-preserving chunks. Grouping
/// honors fixed verb expressions, compound prepositions, proper-noun runs,
/// URL tokens, "as + participle" and "to + verb" attachment, and
/// sentence-initial discourse markers; chunks longer than five tokens are
/// subdivided greedily left to right. Throws EmptySentence on empty input.
std::vector<Chunk> chunk_sentence(const std::vector<Token>& tokens);

/// Loads a JSON Lines rule bundle {id, level, pattern, replacement}.
std::vector<RewriteRule> load_rule_bundle(const std::string& path);

/// Runs the bundle over a sentence corpus so same-level span collisions
/// surface at load time rather than mid-run.
void check_rule_collisions(const std::vector<RewriteRule>& rules,
                           const std::vector<std::string>& corpus);

// Lightweight part-of-speech guess shared with the type assigner.
enum class PosClass { noun, verb, modifier, conjunction, preposition, discourse };
PosClass classify_token(const Token& t);

bool is_discourse_marker(const std::string& label);
bool is_capitalized(const std::string& surface);

}  // namespace qnlp::textprep
