#ifndef LEXICROSSWALK_LEXICROSSWALK_HPP
#define LEXICROSSWALK_LEXICROSSWALK_HPP

#include "lexicrosswalk/crosswalk.hpp"
#include "lexicrosswalk/diagnostics.hpp"
#include "lexicrosswalk/fs_dialect.hpp"
#include "lexicrosswalk/legacy_lmf.hpp"
#include "lexicrosswalk/model.hpp"
#include "lexicrosswalk/tei_dialect.hpp"
#include "lexicrosswalk/validator.hpp"
#include "lexicrosswalk/xml.hpp"

#endif  // LEXICROSSWALK_LEXICROSSWALK_HPP
