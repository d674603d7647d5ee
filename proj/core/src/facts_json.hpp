#pragma once

#include "inlsfs/source_facts.hpp"
#include "json_util.hpp"

namespace inlsfs::detail {

Json call_site_to_json(const RawCallSite& call);
RawCallSite call_site_from_json(const Fields& f);

}  // namespace inlsfs::detail
