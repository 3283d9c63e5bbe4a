#ifndef HERED_HPP
#define HERED_HPP

#include "hered/graph.hpp"
#include "hered/graph_io.hpp"
#include "hered/canonical.hpp"
#include "hered/induced.hpp"
#include "hered/rational.hpp"
#include "hered/family.hpp"
#include "hered/lambda.hpp"
#include "hered/extremal.hpp"
#include "hered/verify.hpp"
#include "hered/report.hpp"

#endif
