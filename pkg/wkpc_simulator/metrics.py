""" Functions for calculation of search metrics. """

from wkpc_simulator.engine import search


def search_and_return_metrics(system, upper, limits=None, **key_arguments):

    """
    Runs a membership search and collects metrics after every BFS layer.

    The search is given a callback that records, for each layer, the layer
    depth, the size of the next frontier, the number of configurations
    explored and visited so far, the number of pruned configurations, the
    longest committed lower strand in the frontier and the elapsed time.

    Parameters:
    - system (PCWKSystem): The system.
    - upper (str): Input word.
    - limits (SearchLimits, optional): Search budget.
    - **key_arguments: Additional keyword arguments to be passed to the `search` function.
      A 'callback' argument is called as well, after the metrics callback.

    Returns:
    - MembershipResult: The search result.
    - list: One dictionary per layer with the keys 'depth', 'frontier', 'explored',
      'visited', 'pruned', 'committed' and 'time'.
    """

    metrics = list()

    # Update Metrics Callback Closure

    def update_metrics_callback(**parameters):

        layer_metrics = {
            'depth': parameters.get('depth'),
            'frontier': parameters.get('frontier'),
            'explored': parameters.get('explored'),
            'visited': parameters.get('visited'),
            'pruned': parameters.get('pruned'),
            'committed': parameters.get('committed'),
            'time': parameters.get('time')
        }

        metrics.append(layer_metrics)

    # Arguments Callback

    arguments_callback = key_arguments.get("callback", None)

    if arguments_callback is None:

        key_arguments['callback'] = update_metrics_callback

    else:

        def composite_callback(**parameters):

            update_metrics_callback(**parameters)
            arguments_callback(**parameters)

        key_arguments['callback'] = composite_callback

    # Search

    result = search(system, upper, limits, **key_arguments)

    return result, metrics
