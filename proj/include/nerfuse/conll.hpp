// CoNLL text format: space-separated columns, blank line between sentences,
// last column is the NE tag. Reads the CoNLL03 IOB1 variant and normalizes it
// to BIO2 internally; writes canonical BIO2.
#pragma once

#include <cstddef>
#include <string>

#include "nerfuse/types.hpp"

namespace nerfuse {

enum class tag_scheme {
    iob1,   // I-X opens or continues; B-X only separates same-type neighbours
    bio2,   // strict: illegal I-X continuations are parse errors
    detect  // assume BIO2, repair IOB1-style continuations and count them
};

struct conll_options {
    tag_scheme scheme = tag_scheme::detect;
    type_set typeset = type_set::conll03();
    std::string labeling = "gold";
    // Accept 1-column files with no tag column (produces no labeling).
    bool words_only = false;
};

struct conll_report {
    std::size_t sentences = 0;
    std::size_t tokens = 0;
    std::size_t columns = 0;          // detected column profile
    std::size_t repaired_tags = 0;    // I-X rewritten to B-X during normalization
    std::size_t docstart_skipped = 0;
};

// Throws parse_error with a 1-based line number on malformed lines or tags.
dataset parse_conll(const std::string& text, const conll_options& opts = {},
                    conll_report* report = nullptr);

// Canonical output: "word tag" or "word extra... tag" lines, one blank line
// between sentences, trailing newline, scheme BIO2. Throws data_error when a
// sentence lacks the labeling.
std::string write_conll(const dataset& ds, const std::string& labeling = "gold");

}  // namespace nerfuse
