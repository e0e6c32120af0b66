#ifndef MOTIVIC_MOTIVIC_HPP
#define MOTIVIC_MOTIVIC_HPP

#include <motivic/bigint.hpp>
#include <motivic/hilbert.hpp>
#include <motivic/laurent.hpp>
#include <motivic/oracles.hpp>
#include <motivic/partitions.hpp>
#include <motivic/power.hpp>
#include <motivic/series.hpp>
#include <motivic/zeta.hpp>

#endif  // MOTIVIC_MOTIVIC_HPP
