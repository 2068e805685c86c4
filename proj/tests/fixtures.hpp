#pragma once

#include <mcbound/circuit.hpp>
#include <mcbound/topology.hpp>

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace mcbound::test
{

inline gate_inputs gi( std::initializer_list<unsigned> left, std::initializer_list<unsigned> right )
{
  return { gate_set::of( left ), gate_set::of( right ) };
}

inline topology topo( std::vector<gate_inputs> gates )
{
  return topology( std::move( gates ) );
}

/* majority of 4: (x1+x2)(x3 x4) + (x1 x2)(x3 + x4 + x3 x4) */
inline circuit majority4()
{
  const auto x = term::input;
  const auto g = term::gate;
  return circuit( 4u,
                  { { xor_set::of( { x( 1 ) } ), xor_set::of( { x( 2 ) } ) },
                    { xor_set::of( { x( 3 ) } ), xor_set::of( { x( 4 ) } ) },
                    { xor_set::of( { x( 1 ), x( 2 ) } ), xor_set::of( { g( 2 ) } ) },
                    { xor_set::of( { g( 1 ) } ), xor_set::of( { x( 3 ), x( 4 ), g( 2 ) } ) } },
                  xor_set::of( { g( 3 ), g( 4 ) } ) );
}

inline const std::string majority4_text = "circuit n=4 k=4\n"
                                          "gate 1: L={x1} R={x2}\n"
                                          "gate 2: L={x3} R={x4}\n"
                                          "gate 3: L={x1,x2} R={g2}\n"
                                          "gate 4: L={g1} R={x3,x4,g2}\n"
                                          "out: {g3,g4}\n";

inline topology majority4_topology()
{
  return topo( { gi( {}, {} ), gi( {}, {} ), gi( {}, { 2 } ), gi( { 1 }, { 2 } ) } );
}

/* gate 3 with its inputs exchanged: the left input now reads the previous layer */
inline topology majority4_well_layered()
{
  return topo( { gi( {}, {} ), gi( {}, {} ), gi( { 2 }, {} ), gi( { 1 }, { 2 } ) } );
}

/* the same circuit with gates reordered so that layer 2 holds a gate without a previous-layer left input */
inline topology majority4_reordered()
{
  return topo( { gi( {}, {} ), gi( {}, { 1 } ), gi( {}, {} ), gi( { 3 }, { 1 } ) } );
}

/* recursive evaluation straight from the gate semantics, sharing nothing with mcbound::eval */
inline bool naive_eval( const circuit& c, uint64_t assignment )
{
  struct evaluator
  {
    const circuit& c;
    uint64_t x;

    bool set_value( const xor_set& s ) const
    {
      bool v = false;
      for ( const auto& t : s.terms() )
      {
        switch ( t.type )
        {
        case term::kind::input:
          v ^= ( ( x >> ( t.index - 1u ) ) & 1u ) != 0u;
          break;
        case term::kind::top:
          v ^= true;
          break;
        case term::kind::gate:
          v ^= gate_value( t.index );
          break;
        }
      }
      return v;
    }

    bool gate_value( unsigned i ) const { return set_value( c.gate( i ).left ) && set_value( c.gate( i ).right ); }
  };
  return evaluator{ c, assignment }.set_value( c.output() );
}

} // namespace mcbound::test
