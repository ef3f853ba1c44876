#ifndef RTGRAPH_RTGRAPH_HPP
#define RTGRAPH_RTGRAPH_HPP

#include "rtgraph/closed_form.hpp"
#include "rtgraph/derived.hpp"
#include "rtgraph/errors.hpp"
#include "rtgraph/graph.hpp"
#include "rtgraph/matrix.hpp"
#include "rtgraph/polynomial.hpp"
#include "rtgraph/rational.hpp"
#include "rtgraph/report.hpp"
#include "rtgraph/spectra.hpp"
#include "rtgraph/verify.hpp"

#endif
