#include <mcbound/bounds.hpp>

#include <mcbound/errors.hpp>

#include <sstream>

namespace mcbound
{

namespace
{

big_count power_of_three( unsigned e )
{
  return boost::multiprecision::pow( big_count( 3 ), e );
}

} // namespace

big_count power_of_two( unsigned e )
{
  big_count r = 1;
  return r << e;
}

big_count lemma15_bound( unsigned n, unsigned k )
{
  return power_of_two( k * k + 2u * k + 2u * k * n + n + 1u );
}

big_count topology_count_bound( unsigned k )
{
  return power_of_two( k * k - k );
}

big_count circuits_per_topology( unsigned n, unsigned k )
{
  return boost::multiprecision::pow( power_of_two( n + 1u ), 2u * k ) * power_of_two( k + n + 1u );
}

big_count negnormal_bound( unsigned n, unsigned k )
{
  return boost::multiprecision::pow( 3 * power_of_two( 2u * n ), k ) * power_of_two( n + k + 1u );
}

big_count corollary_bound( unsigned n, unsigned k )
{
  return power_of_three( k ) * power_of_two( k * k + 2u * k * n + n + 1u );
}

big_count refined_bound( unsigned n, unsigned k, const big_count& t )
{
  if ( t < 1 )
    throw contract_error( "refined_bound needs at least one topology class" );
  return power_of_three( k ) * power_of_two( 2u * k * n + n + k + 1u ) * t;
}

big_count b_n_size( unsigned n )
{
  if ( n > b_n_max_arity )
    throw capacity_error( "|B_n| has 2^" + std::to_string( n ) + " + 1 bits; exact values stop at n = " +
                          std::to_string( b_n_max_arity ) );
  return power_of_two( 1u << n );
}

bound_report pigeonhole_report( unsigned n, unsigned k, const big_count& t )
{
  bound_report r;
  r.n = n;
  r.k = k;
  r.topology_classes = t;
  r.lemma15 = lemma15_bound( n, k );
  r.topology_count = topology_count_bound( k );
  r.circuits_per_topology = circuits_per_topology( n, k );
  r.negnormal = negnormal_bound( n, k );
  r.corollary = corollary_bound( n, k );
  r.refined = refined_bound( n, k, t );
  r.b_n = b_n_size( n );
  r.verdict = r.refined < r.b_n;
  return r;
}

std::string to_string( const bound_report& r )
{
  std::ostringstream os;
  os << "n = " << r.n << '\n'
     << "k = " << r.k << '\n'
     << "topology_classes = " << r.topology_classes << '\n'
     << "lemma15_bound = " << r.lemma15 << '\n'
     << "topology_count_bound = " << r.topology_count << '\n'
     << "circuits_per_topology = " << r.circuits_per_topology << '\n'
     << "negnormal_bound = " << r.negnormal << '\n'
     << "corollary_bound = " << r.corollary << '\n'
     << "refined_bound = " << r.refined << '\n'
     << "|B_n| = " << r.b_n << '\n'
     << "verdict: M(" << r.n << ") >= " << r.k + 1u << ": " << ( r.verdict ? "true" : "false" ) << '\n';
  return os.str();
}

} // namespace mcbound
