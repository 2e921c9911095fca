#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aimp/nlp.hpp"

namespace aimp::nlp {

/// Reads CoNLL-U. Consumes ID, FORM, LEMMA, UPOS (XPOS when UPOS is "_"), HEAD
/// and DEPREL; skips comments, multiword ranges and empty nodes.
/// Throws FormatError on malformed rows.
std::vector<SentenceAnnotation> load_conllu(std::string_view text);

/// Writes the consumed columns back out; unconsumed columns become "_".
std::string write_conllu(const std::vector<SentenceAnnotation>& sentences);

}  // namespace aimp::nlp
