#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace psearch {

/// Seed and principle domains. Closed vocabulary; matches the Category
/// column of seed manifests.
enum class SeedCategory {
    Harmlessness,
    Helpfulness,
    Honesty,
    CodingDebugging,
    Math,
};

std::string_view to_string(SeedCategory category);
SeedCategory category_from_string(std::string_view text);  // throws ValidationError

/// One atomic rewrite direction. The description is imperative text spliced
/// into rewrite prompts ("You should optimize this query by <description>.").
struct Principle {
    std::string id;  // snake_case slug, unique within a catalog
    SeedCategory domain = SeedCategory::Helpfulness;
    std::string name;
    std::string description;
};

/// Ordered, immutable-after-load set of principles: the search's action
/// space. Ordering is stable across loads of the same document so action
/// indexing is reproducible.
class PrincipleCatalog {
public:
    /// Parse a catalog document (JSON, see docs/schema in README).
    /// Throws ParseError on malformed JSON, ValidationError on empty lists,
    /// duplicate ids, unknown domains, or blank names/descriptions.
    static PrincipleCatalog load(std::string_view document);

    /// The bundled catalog (also shipped as data/principles.json).
    static const PrincipleCatalog& builtin();
    static std::string_view builtin_document();

    const std::string& version() const { return version_; }
    const std::vector<Principle>& principles() const { return principles_; }

    const Principle* find(std::string_view id) const;
    const Principle& require(std::string_view id) const;  // throws ValidationError

    /// Action space for one seed category: the category's own principles
    /// followed by all Helpfulness principles (deduplicated, first occurrence
    /// wins), each group in catalog order.
    std::vector<Principle> action_space(SeedCategory category) const;
    std::vector<std::string> action_space_ids(SeedCategory category) const;

private:
    std::string version_;
    std::vector<Principle> principles_;
};

/// Which prompt scaffold wraps a rewrite request.
enum class RewriteTemplate {
    ExternalRewriter,  // "The user query to be paraphrased is ..."
    LocalRewriter,     // "You are an expert prompt engineer. ..."
};

std::string_view to_string(RewriteTemplate t);
RewriteTemplate template_from_string(std::string_view text);  // throws ValidationError

/// Fill the selected template with the instruction and the principle's
/// description, both substituted verbatim. Throws ValidationError on an
/// empty instruction.
std::string render_rewrite_prompt(std::string_view instruction, const Principle& principle,
                                  RewriteTemplate t);

}  // namespace psearch
