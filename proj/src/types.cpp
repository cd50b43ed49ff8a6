#include "nerfuse/types.hpp"

#include <algorithm>
#include <set>

namespace nerfuse {

type_set::type_set(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw data_error("typeset: empty entity type name");
        if (!seen.insert(n).second) throw data_error("typeset: duplicate entity type " + n);
    }
}

bool type_set::contains(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t type_set::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw data_error("typeset: unknown entity type " + name);
    return static_cast<std::size_t>(it - names_.begin());
}

bio_tag parse_tag(const std::string& text, const type_set* types) {
    if (text == "O") return bio_tag::o();
    if (text.size() < 3 || text[1] != '-' || (text[0] != 'B' && text[0] != 'I'))
        throw parse_error("illegal tag string '" + text + "'");
    std::string etype = text.substr(2);
    if (types && !types->contains(etype))
        throw parse_error("tag '" + text + "' uses entity type outside the typeset");
    return text[0] == 'B' ? bio_tag::b(std::move(etype)) : bio_tag::i(std::move(etype));
}

std::string format_tag(const bio_tag& tag) {
    switch (tag.kind) {
        case bio_kind::outside: return "O";
        case bio_kind::begin: return "B-" + tag.etype;
        case bio_kind::inside: return "I-" + tag.etype;
    }
    return "O";
}

const std::vector<bio_tag>& sentence_record::labeling(const std::string& name) const {
    auto it = labelings.find(name);
    if (it == labelings.end())
        throw data_error("sentence " + id + ": missing labeling '" + name + "'");
    return it->second;
}

std::string sentence_record::text() const {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i];
    }
    return out;
}

void validate_dataset(const dataset& ds) {
    std::set<std::string> ids;
    for (const auto& s : ds.sentences) {
        if (s.id.empty()) throw data_error("sentence with empty id");
        if (!ids.insert(s.id).second) throw data_error("duplicate sentence id " + s.id);
        for (const auto& [name, tags] : s.labelings) {
            if (tags.size() != s.tokens.size())
                throw data_error("sentence " + s.id + ": labeling '" + name +
                                 "' has " + std::to_string(tags.size()) + " tags for " +
                                 std::to_string(s.tokens.size()) + " tokens");
            for (const auto& t : tags)
                if (!t.is_o() && !ds.typeset.contains(t.etype))
                    throw data_error("sentence " + s.id + ": labeling '" + name +
                                     "' uses type " + t.etype + " outside the typeset");
            if (!is_valid_bio2(tags))
                throw data_error("sentence " + s.id + ": labeling '" + name +
                                 "' is not a valid BIO2 sequence");
        }
        if (!s.extra_columns.empty() && s.extra_columns.size() != s.tokens.size())
            throw data_error("sentence " + s.id + ": extra column rows do not match tokens");
        for (const auto& [name, soft] : s.soft_labelings)
            if (soft.size() != s.tokens.size())
                throw data_error("sentence " + s.id + ": soft labeling '" + name +
                                 "' has wrong length");
    }
}

std::vector<entity_span> spans_from_tags(const std::vector<bio_tag>& tags) {
    std::vector<entity_span> spans;
    std::optional<entity_span> open;
    for (std::size_t i = 0; i < tags.size(); ++i) {
        const bio_tag& t = tags[i];
        switch (t.kind) {
            case bio_kind::outside:
                if (open) { spans.push_back(*open); open.reset(); }
                break;
            case bio_kind::begin:
                if (open) { spans.push_back(*open); }
                open = entity_span{i, i + 1, t.etype};
                break;
            case bio_kind::inside:
                if (!open || open->etype != t.etype)
                    throw data_error("invalid BIO2 sequence: I-" + t.etype +
                                     " at index " + std::to_string(i) +
                                     " does not continue an open entity");
                open->end = i + 1;
                break;
        }
    }
    if (open) spans.push_back(*open);
    return spans;
}

std::vector<bio_tag> tags_from_spans(std::size_t n, std::vector<entity_span> spans) {
    std::sort(spans.begin(), spans.end(), [](const entity_span& a, const entity_span& b) {
        return a.start != b.start ? a.start < b.start : a.end < b.end;
    });
    for (std::size_t i = 0; i < spans.size(); ++i) {
        const auto& s = spans[i];
        if (s.start >= s.end || s.end > n)
            throw data_error("span [" + std::to_string(s.start) + ", " +
                             std::to_string(s.end) + ") is not a valid interval in [0, " +
                             std::to_string(n) + ")");
        if (i + 1 < spans.size() && s.overlaps(spans[i + 1]))
            throw data_error("overlapping spans [" + std::to_string(s.start) + ", " +
                             std::to_string(s.end) + ") " + s.etype + " and [" +
                             std::to_string(spans[i + 1].start) + ", " +
                             std::to_string(spans[i + 1].end) + ") " + spans[i + 1].etype);
    }
    std::vector<bio_tag> tags(n, bio_tag::o());
    for (const auto& s : spans) {
        tags[s.start] = bio_tag::b(s.etype);
        for (std::size_t i = s.start + 1; i < s.end; ++i) tags[i] = bio_tag::i(s.etype);
    }
    return tags;
}

bool is_valid_bio2(const std::vector<bio_tag>& tags) {
    std::string open;  // type of the entity a following I- may continue
    for (const auto& t : tags) {
        if (t.kind == bio_kind::inside && open != t.etype) return false;
        open = t.is_o() ? "" : t.etype;
    }
    return true;
}

std::size_t repair_bio2(std::vector<bio_tag>& tags) {
    std::size_t repaired = 0;
    std::string open;
    for (auto& t : tags) {
        if (t.kind == bio_kind::inside && open != t.etype) {
            t.kind = bio_kind::begin;
            ++repaired;
        }
        open = t.is_o() ? "" : t.etype;
    }
    return repaired;
}

std::size_t tag_space_size(const type_set& types) { return 1 + 2 * types.size(); }

std::size_t tag_index(const bio_tag& tag, const type_set& types) {
    if (tag.is_o()) return 0;
    std::size_t t = types.index_of(tag.etype);
    return tag.kind == bio_kind::begin ? 1 + 2 * t : 2 + 2 * t;
}

bio_tag tag_at(std::size_t index, const type_set& types) {
    if (index == 0) return bio_tag::o();
    std::size_t t = (index - 1) / 2;
    if (t >= types.size()) throw data_error("tag index out of range");
    return (index - 1) % 2 == 0 ? bio_tag::b(types.at(t)) : bio_tag::i(types.at(t));
}

std::vector<std::string> tag_space_names(const type_set& types) {
    std::vector<std::string> names;
    names.reserve(tag_space_size(types));
    for (std::size_t i = 0; i < tag_space_size(types); ++i)
        names.push_back(format_tag(tag_at(i, types)));
    return names;
}

std::vector<double> one_hot(const bio_tag& tag, const type_set& types) {
    std::vector<double> row(tag_space_size(types), 0.0);
    row[tag_index(tag, types)] = 1.0;
    return row;
}

bio_tag hard_tag_from_row(const std::vector<double>& row, const type_set& types) {
    if (row.size() != tag_space_size(types))
        throw data_error("soft label row has wrong width");
    std::size_t best = 0;  // index 0 is O; ties keep it
    for (std::size_t i = 1; i < row.size(); ++i)
        if (row[i] > row[best]) best = i;
    return tag_at(best, types);
}

std::vector<bio_tag> hard_from_soft(const soft_label_seq& soft, const type_set& types) {
    std::vector<bio_tag> tags;
    tags.reserve(soft.size());
    for (const auto& row : soft.rows) tags.push_back(hard_tag_from_row(row, types));
    repair_bio2(tags);
    return tags;
}

}  // namespace nerfuse
