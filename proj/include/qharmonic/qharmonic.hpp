#ifndef QHARMONIC_QHARMONIC_HPP
#define QHARMONIC_QHARMONIC_HPP

#include <qharmonic/bigrat.hpp>
#include <qharmonic/poly.hpp>
#include <qharmonic/ratfunc.hpp>
#include <qharmonic/serialize.hpp>
#include <qharmonic/qcombinatorics.hpp>
#include <qharmonic/arith_context.hpp>
#include <qharmonic/sums.hpp>
#include <qharmonic/transforms.hpp>
#include <qharmonic/identities.hpp>
#include <qharmonic/report_io.hpp>

#endif // QHARMONIC_QHARMONIC_HPP
