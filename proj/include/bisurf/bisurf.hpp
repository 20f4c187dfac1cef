#ifndef BISURF_BISURF_HPP
#define BISURF_BISURF_HPP

#include <bisurf/rational.hpp>
#include <bisurf/matrix.hpp>
#include <bisurf/bidegree.hpp>
#include <bisurf/bipoly.hpp>
#include <bisurf/xpoly.hpp>
#include <bisurf/ideal.hpp>
#include <bisurf/resolution.hpp>
#include <bisurf/classify.hpp>
#include <bisurf/implicitize.hpp>
#include <bisurf/dualscroll.hpp>
#include <bisurf/parse.hpp>
#include <bisurf/report.hpp>

#endif
