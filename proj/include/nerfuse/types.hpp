// Core corpus model: entity types, BIO2 tags, spans, sentences, datasets.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nerfuse/error.hpp"

namespace nerfuse {

// Ordered, unique entity type names. Declaration order is meaningful: it fixes
// tag-space indices and the priority used when label mixing picks two of
// several candidate types.
class type_set {
public:
    type_set() = default;
    explicit type_set(std::vector<std::string> names);

    static type_set conll03() { return type_set({"PER", "ORG", "LOC", "MISC"}); }

    std::size_t size() const { return names_.size(); }
    const std::string& at(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    bool contains(const std::string& name) const;
    // Throws data_error for unknown names.
    std::size_t index_of(const std::string& name) const;

    bool operator==(const type_set& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

enum class bio_kind { outside, begin, inside };

// One BIO2 tag. etype is empty exactly when kind == outside.
struct bio_tag {
    bio_kind kind = bio_kind::outside;
    std::string etype;

    static bio_tag o() { return {}; }
    static bio_tag b(std::string t) { return {bio_kind::begin, std::move(t)}; }
    static bio_tag i(std::string t) { return {bio_kind::inside, std::move(t)}; }

    bool is_o() const { return kind == bio_kind::outside; }
    bool operator==(const bio_tag&) const = default;
};

// "O", "B-PER", "I-PER", ... Throws parse_error on malformed strings; when a
// typeset is given, unknown types are also rejected.
bio_tag parse_tag(const std::string& text, const type_set* types = nullptr);
std::string format_tag(const bio_tag& tag);

// Half-open token interval [start, end) carrying one entity type.
struct entity_span {
    std::size_t start = 0;
    std::size_t end = 0;
    std::string etype;

    std::size_t length() const { return end - start; }
    bool overlaps(const entity_span& other) const {
        return start < other.end && other.start < end;
    }
    bool operator==(const entity_span&) const = default;
};

// Per-token probability rows over the BIO2 tag space; see tag_space below for
// the index layout. Every row must be a distribution.
struct soft_label_seq {
    std::vector<std::vector<double>> rows;

    std::size_t size() const { return rows.size(); }
};

// Per-entity-type span lists produced by the per-type LLM passes. Lists are
// individually non-overlapping; spans of different types may overlap, which is
// exactly what fusion resolves.
enum class decode_verdict { clean, repaired, rejected };

struct type_annotation {
    std::vector<entity_span> spans;
    decode_verdict verdict = decode_verdict::clean;
    std::vector<std::string> notes;
};

struct multi_label_annotation {
    std::string sentence_id;
    std::vector<type_annotation> by_type;  // indexed by typeset order
};

struct sentence_record {
    std::string id;
    std::vector<std::string> tokens;
    // Middle CoNLL columns (POS, chunk) when the source file had four columns;
    // carried verbatim, never interpreted.
    std::vector<std::vector<std::string>> extra_columns;
    std::map<std::string, std::vector<bio_tag>> labelings;
    std::map<std::string, soft_label_seq> soft_labelings;
    std::map<std::string, multi_label_annotation> multi_labelings;

    std::size_t size() const { return tokens.size(); }
    bool has_labeling(const std::string& name) const { return labelings.count(name) > 0; }
    const std::vector<bio_tag>& labeling(const std::string& name) const;
    std::string text() const;  // space-joined tokens
};

struct dataset {
    std::vector<sentence_record> sentences;
    type_set typeset = type_set::conll03();

    std::size_t size() const { return sentences.size(); }
    bool empty() const { return sentences.empty(); }
};

// Checks ids unique, labeling lengths, tag validity against the typeset and
// BIO2 well-formedness. Throws data_error with the offending sentence id.
void validate_dataset(const dataset& ds);

// ---- BIO2 <-> span duality -------------------------------------------------

// Decodes a valid BIO2 sequence into sorted non-overlapping spans.
// Throws data_error naming the offending index on invalid input.
std::vector<entity_span> spans_from_tags(const std::vector<bio_tag>& tags);

// Inverse of spans_from_tags. Throws data_error listing the first colliding
// pair when spans overlap or fall outside [0, n).
std::vector<bio_tag> tags_from_spans(std::size_t n, std::vector<entity_span> spans);

// True when the sequence decodes without error.
bool is_valid_bio2(const std::vector<bio_tag>& tags);

// Rewrites illegal I-X continuations (sentence-initial, after O, or after a
// different type) to B-X. Returns the number of rewritten tags.
std::size_t repair_bio2(std::vector<bio_tag>& tags);

// ---- tag space --------------------------------------------------------------

// Index layout of the BIO2 tag space used by soft labels and the tagger:
// 0 = O, 1+2i = B-type_i, 2+2i = I-type_i, for type_i in typeset order.
std::size_t tag_space_size(const type_set& types);
std::size_t tag_index(const bio_tag& tag, const type_set& types);
bio_tag tag_at(std::size_t index, const type_set& types);
std::vector<std::string> tag_space_names(const type_set& types);

// One-hot row for a tag; rows of this size are what soft_label_seq stores.
std::vector<double> one_hot(const bio_tag& tag, const type_set& types);

// Argmax decoding of a soft row, ties broken toward O, then lowest index.
bio_tag hard_tag_from_row(const std::vector<double>& row, const type_set& types);
std::vector<bio_tag> hard_from_soft(const soft_label_seq& soft, const type_set& types);

}  // namespace nerfuse
