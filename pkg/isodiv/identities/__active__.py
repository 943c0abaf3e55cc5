# isodiv list of active identities
# licensed under the GNU Public License, version 2


from identities import chain, pullback, recurrences, relations

identities = {'chain': chain.ChainRule,  # A list of available identities
              'pullback_lemma': pullback.PullbackLemma,
              'rec1': recurrences.FirstRecurrence,
              'rec2': recurrences.SecondRecurrence,
              'rel_x': relations.RelationToX,
              'rel_x2': relations.SecondRelationToX,
              'second_chain': chain.SecondChainRule,
              }
