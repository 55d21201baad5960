#pragma once

#include "qgdef/serialize.hpp"
#include "qgdef/solvers.hpp"

namespace qgdef {

inline constexpr const char* kCertificateFormat = "qgdef-certificate/1";

Json associator_certificate(const Uea& U, const AssociatorResult& r);
Json twist_certificate(const Uea& U, const TwistResult& r);
Json qt_certificate(const Uea& U, const QTResult& r);

Json h3_report_to_json(const H3Report& r);

} // namespace qgdef
