#include <mcbound/io.hpp>

#include <mcbound/errors.hpp>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace mcbound
{

namespace
{

struct source_line
{
  std::string_view text;
  std::size_t number;
};

std::vector<source_line> split_lines( std::string_view text )
{
  std::vector<source_line> lines;
  std::size_t number = 1;
  while ( !text.empty() )
  {
    const auto end = text.find( '\n' );
    auto line = text.substr( 0, end );
    if ( !line.empty() && line.back() == '\r' )
      line.remove_suffix( 1 );
    lines.push_back( { line, number++ } );
    if ( end == std::string_view::npos )
      break;
    text.remove_prefix( end + 1u );
  }
  return lines;
}

bool is_blank( std::string_view s )
{
  for ( char ch : s )
  {
    if ( !std::isspace( static_cast<unsigned char>( ch ) ) )
      return false;
  }
  return true;
}

class line_reader
{
public:
  explicit line_reader( std::string_view text ) : lines_( split_lines( text ) ) {}

  void skip_blank()
  {
    while ( pos_ < lines_.size() && is_blank( lines_[pos_].text ) )
      ++pos_;
  }

  /* next line, which must exist and may not be blank */
  source_line next( std::string_view expected )
  {
    if ( pos_ == lines_.size() )
      throw parse_error( lines_.empty() ? 1u : lines_.back().number + 1u, 1u, "expected " + std::string( expected ) +
                                                                                 ", found end of input" );
    const auto line = lines_[pos_++];
    if ( is_blank( line.text ) )
      throw parse_error( line.number, 1u, "expected " + std::string( expected ) + ", found a blank line" );
    return line;
  }

  void expect_end()
  {
    skip_blank();
    if ( pos_ != lines_.size() )
      throw parse_error( lines_[pos_].number, 1u, "unexpected content after the last expected line" );
  }

private:
  std::vector<source_line> lines_;
  std::size_t pos_{ 0 };
};

class scanner
{
public:
  explicit scanner( const source_line& line ) : line_( line ) {}

  [[noreturn]] void fail( const std::string& message ) const { fail_at( pos_, message ); }

  [[noreturn]] void fail_at( std::size_t pos, const std::string& message ) const
  {
    throw parse_error( line_.number, pos + 1u, message );
  }

  void skip_spaces()
  {
    while ( pos_ < line_.text.size() && ( line_.text[pos_] == ' ' || line_.text[pos_] == '\t' ) )
      ++pos_;
  }

  std::size_t position() const noexcept { return pos_; }

  bool peek( char ch )
  {
    skip_spaces();
    return pos_ < line_.text.size() && line_.text[pos_] == ch;
  }

  void expect( std::string_view literal )
  {
    skip_spaces();
    if ( line_.text.substr( pos_, literal.size() ) != literal )
      fail( "expected '" + std::string( literal ) + "'" );
    pos_ += literal.size();
  }

  uint64_t number()
  {
    skip_spaces();
    uint64_t value = 0;
    const auto* first = line_.text.data() + pos_;
    const auto* last = line_.text.data() + line_.text.size();
    const auto [ptr, ec] = std::from_chars( first, last, value );
    if ( ec != std::errc() || ptr == first )
      fail( "expected a non-negative integer" );
    pos_ += static_cast<std::size_t>( ptr - first );
    return value;
  }

  /* number with an inclusive upper bound, reported at its own column */
  unsigned bounded( uint64_t max, const std::string& what )
  {
    skip_spaces();
    const auto start = pos_;
    const auto value = number();
    if ( value > max )
      fail_at( start, what + " " + std::to_string( value ) + " exceeds the maximum of " + std::to_string( max ) );
    return static_cast<unsigned>( value );
  }

  std::string_view rest()
  {
    skip_spaces();
    return line_.text.substr( pos_ );
  }

  void advance( std::size_t count ) { pos_ += count; }

  void expect_end()
  {
    skip_spaces();
    if ( pos_ != line_.text.size() )
      fail( "unexpected trailing content" );
  }

private:
  source_line line_;
  std::size_t pos_{ 0 };
};

/* `{a,b,...}` with elements read by `element`, which is called with the element's column */
template<typename Element>
void parse_braced( scanner& s, Element&& element )
{
  s.expect( "{" );
  if ( s.peek( '}' ) )
  {
    s.advance( 1u );
    return;
  }
  while ( true )
  {
    s.skip_spaces();
    element( s.position() );
    if ( s.peek( ',' ) )
    {
      s.advance( 1u );
      continue;
    }
    s.expect( "}" );
    return;
  }
}

xor_set parse_xor_set( scanner& s, unsigned num_inputs, unsigned gate_limit, const std::string& gate_context )
{
  xor_set out;
  parse_braced( s, [&]( std::size_t column ) {
    term t;
    if ( s.peek( 'T' ) )
    {
      s.advance( 1u );
      t = term::top();
    }
    else if ( s.peek( 'x' ) )
    {
      s.advance( 1u );
      const auto j = s.number();
      if ( j == 0u || j > num_inputs )
        s.fail_at( column, "input x" + std::to_string( j ) + " out of range 1.." + std::to_string( num_inputs ) );
      t = term::input( static_cast<unsigned>( j ) );
    }
    else if ( s.peek( 'g' ) )
    {
      s.advance( 1u );
      const auto j = s.number();
      if ( j == 0u || j > gate_limit )
        s.fail_at( column, "g" + std::to_string( j ) + " is not available in " + gate_context );
      t = term::gate( static_cast<unsigned>( j ) );
    }
    else
    {
      s.fail( "expected a term x<j>, T or g<j>" );
    }
    if ( out.contains( t ) )
      s.fail_at( column, "duplicate term" );
    out.flip( t );
  } );
  return out;
}

gate_set parse_gate_set( scanner& s, unsigned limit, const std::string& context )
{
  gate_set out;
  parse_braced( s, [&]( std::size_t column ) {
    const auto j = s.number();
    if ( j == 0u || j > limit )
      s.fail_at( column, "gate " + std::to_string( j ) + " is not available in " + context );
    const auto g = gate_set::of( { static_cast<unsigned>( j ) } );
    if ( out.intersects( g ) )
      s.fail_at( column, "duplicate gate" );
    out = out | g;
  } );
  return out;
}

void expect_gate_header( scanner& s, unsigned i )
{
  s.expect( "gate" );
  s.skip_spaces();
  const auto column = s.position();
  if ( s.number() != i )
    s.fail_at( column, "expected gate " + std::to_string( i ) );
  s.expect( ":" );
}

std::string terms_to_string( const xor_set& s )
{
  std::string out = "{";
  bool first = true;
  for ( const auto& t : s.terms() )
  {
    if ( !first )
      out += ',';
    first = false;
    switch ( t.type )
    {
    case term::kind::input:
      out += 'x' + std::to_string( t.index );
      break;
    case term::kind::top:
      out += 'T';
      break;
    case term::kind::gate:
      out += 'g' + std::to_string( t.index );
      break;
    }
  }
  return out + '}';
}

std::string gates_to_string( gate_set s )
{
  std::string out = "{";
  bool first = true;
  for ( auto g : s.members() )
  {
    if ( !first )
      out += ',';
    first = false;
    out += std::to_string( g );
  }
  return out + '}';
}

/* `expected_k` < 0 accepts any gate count */
topology read_topology( line_reader& reader, int expected_k = -1 )
{
  scanner header( reader.next( "'topology k=<k>'" ) );
  header.expect( "topology" );
  header.expect( "k=" );
  header.skip_spaces();
  const auto k_column = header.position();
  const auto k = header.bounded( topology::max_gates, "gate count" );
  if ( expected_k >= 0 && k != static_cast<unsigned>( expected_k ) )
    header.fail_at( k_column, "topology has k=" + std::to_string( k ) + ", the set declares k=" +
                                  std::to_string( expected_k ) );
  header.expect_end();

  std::vector<gate_inputs> gates;
  for ( unsigned i = 1; i <= k; ++i )
  {
    scanner s( reader.next( "gate " + std::to_string( i ) ) );
    expect_gate_header( s, i );
    const auto context = "gate " + std::to_string( i );
    s.expect( "L=" );
    const auto left = parse_gate_set( s, i - 1u, context );
    s.expect( "R=" );
    const auto right = parse_gate_set( s, i - 1u, context );
    s.expect_end();
    gates.push_back( { left, right } );
  }
  return topology( std::move( gates ) );
}

} // namespace

std::string to_string( const truth_table& tt )
{
  return "tt n=" + std::to_string( tt.num_vars() ) + " " + tt.to_binary();
}

std::string to_string( const circuit& c )
{
  std::ostringstream os;
  os << "circuit n=" << c.num_inputs() << " k=" << c.num_gates() << '\n';
  for ( unsigned i = 1; i <= c.num_gates(); ++i )
  {
    os << "gate " << i << ": L=" << terms_to_string( c.gate( i ).left ) << " R=" << terms_to_string( c.gate( i ).right )
       << '\n';
  }
  os << "out: " << terms_to_string( c.output() ) << '\n';
  return os.str();
}

std::string to_string( const topology& t )
{
  std::ostringstream os;
  os << "topology k=" << t.num_gates() << '\n';
  for ( unsigned i = 1; i <= t.num_gates(); ++i )
    os << "gate " << i << ": L=" << gates_to_string( t.gate( i ).left ) << " R=" << gates_to_string( t.gate( i ).right )
       << '\n';
  return os.str();
}

std::string to_string( const topology_set& s )
{
  std::ostringstream os;
  os << "topologyset k=" << s.k << " count=" << s.size() << '\n';
  for ( std::size_t m = 0; m < s.members.size(); ++m )
  {
    if ( m != 0u )
      os << '\n';
    os << to_string( s.members[m] );
  }
  return os.str();
}

truth_table parse_truth_table( std::string_view text )
{
  line_reader reader( text );
  reader.skip_blank();
  scanner s( reader.next( "'tt n=<n> <bits>'" ) );
  s.expect( "tt" );
  s.expect( "n=" );
  const auto n = s.bounded( truth_table::max_arity, "arity" );
  s.skip_spaces();
  const auto start = s.position();
  const auto bits = s.rest();
  std::size_t length = 0;
  while ( length < bits.size() && ( bits[length] == '0' || bits[length] == '1' ) )
    ++length;
  truth_table tt( n );
  if ( length != tt.num_bits() )
    s.fail_at( start + std::min<std::size_t>( length, tt.num_bits() ),
               "expected " + std::to_string( tt.num_bits() ) + " bits, found " + std::to_string( length ) );
  for ( std::size_t v = 0; v < length; ++v )
    tt.set_bit( v, bits[v] == '1' );
  s.advance( length );
  s.expect_end();
  reader.expect_end();
  return tt;
}

circuit parse_circuit( std::string_view text )
{
  line_reader reader( text );
  reader.skip_blank();
  scanner header( reader.next( "'circuit n=<n> k=<k>'" ) );
  header.expect( "circuit" );
  header.expect( "n=" );
  const auto n = header.bounded( circuit::max_inputs, "arity" );
  header.expect( "k=" );
  const auto k = header.bounded( circuit::max_gates, "gate count" );
  header.expect_end();

  std::vector<and_gate> gates;
  for ( unsigned i = 1; i <= k; ++i )
  {
    scanner s( reader.next( "gate " + std::to_string( i ) ) );
    expect_gate_header( s, i );
    const auto context = "gate " + std::to_string( i );
    s.expect( "L=" );
    const auto left = parse_xor_set( s, n, i - 1u, context );
    s.expect( "R=" );
    const auto right = parse_xor_set( s, n, i - 1u, context );
    s.expect_end();
    gates.push_back( { left, right } );
  }

  scanner s( reader.next( "'out: {...}'" ) );
  s.expect( "out:" );
  const auto output = parse_xor_set( s, n, k, "the output" );
  s.expect_end();
  reader.expect_end();
  return circuit( n, std::move( gates ), output );
}

topology parse_topology( std::string_view text )
{
  line_reader reader( text );
  reader.skip_blank();
  auto t = read_topology( reader );
  reader.expect_end();
  return t;
}

topology_set parse_topology_set( std::string_view text )
{
  line_reader reader( text );
  reader.skip_blank();
  scanner header( reader.next( "'topologyset k=<k> count=<c>'" ) );
  header.expect( "topologyset" );
  header.expect( "k=" );
  const auto k = header.bounded( topology::max_gates, "gate count" );
  header.expect( "count=" );
  const auto count = header.number();
  header.expect_end();

  topology_set out{ k, {} };
  for ( uint64_t m = 0; m < count; ++m )
  {
    reader.skip_blank();
    out.members.push_back( read_topology( reader, static_cast<int>( k ) ) );
  }
  reader.expect_end();
  return out;
}

std::string read_file( const std::filesystem::path& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw std::runtime_error( "cannot open " + path.string() + " for reading" );
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file( const std::filesystem::path& path, std::string_view contents )
{
  std::ofstream out( path, std::ios::binary | std::ios::trunc );
  if ( !out )
    throw std::runtime_error( "cannot open " + path.string() + " for writing" );
  out << contents;
  if ( !out )
    throw std::runtime_error( "failed writing " + path.string() );
}

} // namespace mcbound
